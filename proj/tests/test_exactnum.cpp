#include "doctest.h"
#include "helpers.hpp"
#include "wick/error.hpp"
#include "wick/linear_solve.hpp"

using namespace wick;
using wick::test::rf;

TEST_CASE("scalar arithmetic and rendering") {
  const Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) / (Scalar(1) + i)) == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(Scalar::fraction(6, 4).to_string() == "3/2");
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
  CHECK((Scalar(2) * i).to_string() == "2*i");
  CHECK((Scalar(1) + Scalar(2) * i).to_string() == "(1 + 2*i)");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), MathError);
}

TEST_CASE("cancellation to lowest terms") {
  CHECK(rf("(z1^2 - w1^2)/(z1 - w1)") == rf("z1 + w1"));
  CHECK(rf("(z1^2 - w1^2)/(z1 - w1)").is_polynomial());
  CHECK(rf("(z1*w1 + z1)/(z1^2*w1 + z1^2)") == rf("1/z1"));
  CHECK(rf("(1+z1*w1)^3/(1+z1*w1)^2") == rf("1+z1*w1"));
  CHECK(rf("(z1 + z2)*(z1 - w2)/((z1 - w2)*w1)", 2) == rf("(z1+z2)/w1", 2));
  CHECK(rf("(i*z1 + i)/(2*z1 + 2)") == rf("i/2"));
}

TEST_CASE("gcd of polynomials") {
  const auto a = rf("(z1 - w1)*(1 + z1*w1)^2").num();
  const auto b = rf("(z1 - w1)^2*(1 + z1*w1)").num();
  CHECK(gcd(a, b) == rf("(z1 - w1)*(1 + z1*w1)").num().monic());
  CHECK(gcd(rf("z1^3*w1").num(), rf("z1*w1^2").num()) == rf("z1*w1").num());
  CHECK(gcd(rf("z1 + 1").num(), rf("w1 + 1").num()).is_one());
}

TEST_CASE("differentiation examples") {
  CHECK(rf("w1/(1+z1*w1)").derivative(w_slot(1)) == rf("1/(1+z1*w1)^2"));
  CHECK(rf("z1^3*w1^2").derivative(z_slot(1)) == rf("3*z1^2*w1^2"));
  Exponent e{};
  e[z_slot(1)] = 2;
  e[w_slot(1)] = 1;
  CHECK(rf("z1^3*w1^2").derivative(e) == rf("12*z1*w1"));
  CHECK(rf("1/(z1 - w2)", 2).derivative(w_slot(2)) == rf("1/(z1 - w2)^2", 2));
}

TEST_CASE("parsing and canonical printing") {
  CHECK(rf("2 + 3*i*z1").to_string() == rf("3*i*z1 + 2").to_string());
  CHECK(rf("z1*w1^2 - 1/2").to_string() == "z1*w1^2 - 1/2");
  CHECK(rf("w1/(1+z1*w1)").to_string() == "w1/(z1*w1 + 1)");
  CHECK(rf("1/(z1*w1)").to_string() == "1/(z1*w1)");
  CHECK_THROWS_AS(rf("z1 + v"), InputError);
  CHECK_THROWS_AS(rf("z2"), InputError);
  CHECK_THROWS_AS(rf("z1 +"), InputError);
  CHECK_THROWS_WITH_AS(rf("1/(z1 - z1)"), doctest::Contains("zero divisor"), InputError);
  try {
    rf("z1 * * w1");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("column 6") != std::string::npos);
  }
}

TEST_CASE("division by zero and singular substitution") {
  CHECK_THROWS_WITH_AS(rf("z1") / RationalFunction(), "zero divisor", MathError);
  auto img = identity_images();
  img[z_slot(1)] = rf("-1/w1");
  CHECK_THROWS_WITH_AS(rf("1/(1 + z1*w1)").substitute(img), "singular substitution", MathError);
  img[z_slot(1)] = rf("w1");
  CHECK(rf("1/(1 + z1*w1)").substitute(img) == rf("1/(1 + w1^2)"));
}

TEST_CASE("random rational functions obey the field laws") {
  test::RandomRF gen(20240611u, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen.next(), b = gen.next(), c = gen.next();
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(equals_by_cross_multiplication(a * b, b * a));
    for (int s : {z_slot(1), w_slot(2)}) {
      CHECK((a * b).derivative(s) == a.derivative(s) * b + a * b.derivative(s));
      if (!b.is_zero()) CHECK((a / b).derivative(s) == (a.derivative(s) * b - a * b.derivative(s)) / (b * b));
    }
    CHECK(parse_expression(a.to_string(), 2) == a);
  }
}

TEST_CASE("series arithmetic and rendering") {
  using test::series;
  const auto zs = series({"z1", "0", "0"});
  const auto ws = series({"w1", "1", "0"});
  CHECK(to_string(zs * ws) == "z1*w1 + z1*v");
  const auto sq = series({"z1^2*w1^2", "4*z1*w1", "2"});
  CHECK(to_string(sq) == "z1^2*w1^2 + 4*z1*w1*v + 2*v^2");
  CHECK(to_string(series({"0", "1/(1+z1*w1)"})) == "(1/(z1*w1 + 1))*v");
  CHECK(sq.shifted(1) == series({"0", "z1^2*w1^2", "4*z1*w1"}));
  CHECK(sq.shifted(1).divided_by_nu() == series({"z1^2*w1^2", "4*z1*w1"}));
  CHECK_THROWS_AS(sq.divided_by_nu(), MathError);
  CHECK((sq + zs.truncated(1)).order() == 1);
}

TEST_CASE("exact linear algebra") {
  Matrix<Scalar> a{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(rank(a) == 1);
  const auto x = solve_linear(a, {Scalar(3), Scalar(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(3));
  CHECK((*x)[1] == Scalar(0));
  CHECK_FALSE(solve_linear(a, {Scalar(3), Scalar(7)}).has_value());
  Matrix<RationalFunction> g{{rf("1/(1+z1*w1)^2")}};
  const auto inv = invert(g);
  CHECK(inv.inverse[0][0] == rf("(1+z1*w1)^2"));
  CHECK(inv.determinant == rf("1/(1+z1*w1)^2"));
  CHECK_THROWS_AS(invert(Matrix<RationalFunction>{{rf("z1"), rf("z1")}, {rf("w1"), rf("w1")}}), MathError);
}
