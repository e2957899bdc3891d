#include <cstdlib>

#include "charts.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "wick/error.hpp"
#include "wick/expression.hpp"
#include "wick/star_product.hpp"

using namespace wick;
using namespace wick::test;

namespace {

Exponent exp1(int z, int w) {
  Exponent e{};
  e[z_slot(1)] = static_cast<std::uint16_t>(z);
  e[w_slot(1)] = static_cast<std::uint16_t>(w);
  return e;
}

}  // namespace

TEST_CASE("flat products") {
  const StarProduct sp(flat1(), 2);
  CHECK(to_string(sp.star(rf("z1"), rf("w1"))) == "z1*w1 + v");
  CHECK(to_string(sp.star(rf("w1"), rf("z1"))) == "z1*w1");
  CHECK(to_string(StarProduct(flat1(), 4).star(rf("z1^2"), rf("w1^2"))) == "z1^2*w1^2 + 4*z1*w1*v + 2*v^2");
  CHECK(to_string(sp.ad(sp.lift(rf("z1*w1")), sp.lift(rf("z1")))) == "-z1*v");
  CHECK(to_string(sp.ad(sp.lift(rf("z1")), sp.lift(rf("w1")))) == "v");
  CHECK(sp.ad(sp.lift(rf("1")), sp.lift(rf("z1^2*w1/(1+z1)"))).is_zero());
}

TEST_CASE("left multiplication by z1 on the flat chart") {
  const auto l = StarProduct(flat1(), 3).left_mult_operator(rf("z1"));
  Exponent dw{};
  dw[w_slot(1)] = 1;
  CHECK(l[0] == DiffOperator::multiplication(rf("z1")));
  CHECK(l[1].coefficient(dw) == rf("1"));
  CHECK(l[1].terms().size() == 1);
  CHECK(l[2].is_zero());
  CHECK(l[3].is_zero());
}

TEST_CASE("unit") {
  for (const Chart& c : {fs(), hyperbolic(), fs_corrected(), cp2()}) {
    const StarProduct sp(c);
    const int n = c.dimension();
    const auto one = sp.left_mult_operator(RationalFunction(1));
    CHECK(one[0] == DiffOperator::identity());
    for (int t = 1; t <= one.order(); ++t) CHECK(one[t].is_zero());
    const auto f = rf(n == 1 ? "z1^2*w1 + 3*w1" : "z1*w2 + w1^2", n);
    CHECK(sp.star(sp.lift(1), sp.lift(f)) == sp.lift(f));
    CHECK(sp.star(sp.lift(f), sp.lift(1)) == sp.lift(f));
  }
}

TEST_CASE("flat oracle on small monomials") {
  const StarProduct sp(flat1(), 3);
  for (const auto& a : monomial_exponents(1, 3))
    for (const auto& b : monomial_exponents(1, 3)) CHECK(sp.star(monomial(a), monomial(b)) == flat_wick(1, a, b, 3));
}

TEST_CASE("first commutator on the flat chart") {
  const StarProduct sp(flat1(), 3);
  for (const auto& ea : monomial_exponents(1, 3))
    for (const auto& eb : monomial_exponents(1, 3)) {
      const auto a = monomial(ea), b = monomial(eb);
      const auto c = sp.ad(sp.lift(a), sp.lift(b)).divided_by_nu();
      const auto z = z_slot(1), w = w_slot(1);
      CHECK(c[0] == a.derivative(z) * b.derivative(w) - b.derivative(z) * a.derivative(w));
    }
}

TEST_CASE("structural certificates") {
  for (const Chart& c : {flat1(3), fs(), hyperbolic(), flat_corrected(), fs_corrected(), fs_with_v()}) {
    const StarProduct sp(c, 3);
    CHECK(verify_order_bound(sp, 3).holds);
    CHECK(verify_wick_type(sp, 3).holds);
    CHECK(verify_defining_relation(sp, 3).holds);
  }
  const StarProduct sp(cp2(), 2);
  CHECK(verify_order_bound(sp, 1).holds);
  CHECK(verify_wick_type(sp, 1).holds);
  CHECK(verify_defining_relation(sp, 1).holds);
}

TEST_CASE("associativity") {
  CHECK(verify_associativity(StarProduct(fs(2), 2), 2).holds);
  CHECK(verify_associativity(StarProduct(fs_corrected(2), 2), 2).holds);
  CHECK(verify_associativity(StarProduct(flat2(2), 2), 1).holds);
}

TEST_CASE("corrupted product is caught with a stable witness") {
  const StarProduct bad = StarProduct(fs(2), 2).corrupted(2, exp1(0, 2), Scalar(1));
  setenv("WICK_THREADS", "1", 1);
  const auto r1 = verify_associativity(bad, 2);
  setenv("WICK_THREADS", "4", 1);
  const auto r4 = verify_associativity(bad, 2);
  unsetenv("WICK_THREADS");
  CHECK_FALSE(r1.holds);
  REQUIRE(r1.witness.has_value());
  CHECK(r1.witness == r4.witness);
  CHECK(r1.witness->find("a = ") == 0);
}

TEST_CASE("characterizing form round trip") {
  const auto k = extract_karabegov(StarProduct(flat_corrected(), 2));
  CHECK(k[0] == Form::type11({{rf("1")}}));
  CHECK(k[1] == Form::type11({{rf("1")}}));
  CHECK(k[2].is_zero());
  for (const Chart& c : {flat1(2), fs(2), hyperbolic(2), fs_corrected(2), cp2(1)}) CHECK(verify_roundtrip(StarProduct(c)).holds);
}

TEST_CASE("invalid charts are rejected") {
  CHECK_THROWS_AS(StarProduct(Chart(2, 1, {{rf("w1", 2), rf("0", 2)}})), InputError);
}
