#include "doctest.h"
#include "helpers.hpp"
#include "wick/chart_map.hpp"
#include "wick/diff_operator.hpp"
#include "wick/error.hpp"
#include "wick/form.hpp"

using namespace wick;
using wick::test::rf;

namespace {

Form one_form(const std::vector<std::pair<int, RationalFunction>>& parts) {
  Form f;
  for (const auto& [slot, c] : parts) f += c * Form::differential(slot);
  return f;
}

}  // namespace

TEST_CASE("d squares to zero") {
  test::RandomRF gen(7u, 2);
  for (int t = 0; t < 10; ++t) {
    const Form f = Form::function(gen.next());
    CHECK(exterior_d(exterior_d(f)).is_zero());
    const Form a = one_form({{z_slot(1), gen.next()}, {w_slot(2), gen.next()}});
    CHECK(exterior_d(exterior_d(a)).is_zero());
    CHECK(dolbeault_del(dolbeault_del(a)).is_zero());
    CHECK(dolbeault_delbar(dolbeault_delbar(a)).is_zero());
    CHECK(exterior_d(a) == dolbeault_del(a) + dolbeault_delbar(a));
  }
}

TEST_CASE("wedge and types") {
  const Form dz = Form::differential(z_slot(1));
  const Form dw = Form::differential(w_slot(1));
  CHECK(wedge(dz, dw) == -wedge(dw, dz));
  CHECK(wedge(dz, dz).is_zero());
  CHECK(wedge(dz, dw).is_type(1, 1));
  CHECK(basis_name(wedge(dz, dw).terms().begin()->first) == "dz1^dw1");
}

TEST_CASE("kahler form of Fubini-Study is closed and of type (1,1)") {
  const Form omega = rf("1/(1+z1*w1)^2") * wedge(Form::differential(z_slot(1)), Form::differential(w_slot(1)));
  CHECK(omega.is_type(1, 1));
  CHECK(exterior_d(omega).is_zero());
}

TEST_CASE("interior product, Cartan formula and evaluation") {
  const Form dz = Form::differential(z_slot(1));
  const Form dw = Form::differential(w_slot(1));
  const Form f = rf("z1*w1") * wedge(dz, dw);
  const VectorField x({rf("z1")}, {rf("w1^2")});
  CHECK(interior_product(x, f) == rf("z1^2*w1") * dw - rf("z1*w1^3") * dz);
  const VectorField y({rf("1")}, {rf("0")});
  CHECK(evaluate(f, x, y) == -evaluate(f, y, x));
  CHECK(evaluate(f, x, y) == rf("-z1*w1^3"));
  CHECK_THROWS_AS(interior_product(x, Form::function(rf("z1"))), InputError);
  // L_X on functions is X(f); on d f it is d X(f).
  const auto g = rf("z1^2*w1");
  CHECK(lie_derivative(x, Form::function(g)) == Form::function(x.apply(g)));
  CHECK(lie_derivative(x, exterior_d(Form::function(g))) == exterior_d(Form::function(x.apply(g))));
}

TEST_CASE("lie bracket") {
  const VectorField x({rf("z1^2")}, {rf("w1^2")});
  const VectorField y({rf("1")}, {rf("1")});
  CHECK(bracket(x, y) == VectorField({rf("-2*z1")}, {rf("-2*w1")}));
  const auto f = rf("z1^3*w1/(1+z1)");
  CHECK(bracket(x, y).apply(f) == x.apply(y.apply(f)) - y.apply(x.apply(f)));
  CHECK(x.complex_structure() == VectorField({rf("i*z1^2")}, {rf("-i*w1^2")}));
}

TEST_CASE("differential operators") {
  Exponent e{};
  e[w_slot(1)] = 2;
  DiffOperator d;
  d.add(e, rf("z1"));
  d.add(Exponent{}, rf("1"));
  CHECK(d.w_order() == 2);
  CHECK(d.apply(rf("w1^3")) == rf("6*z1*w1 + w1^3"));
  CHECK(multi_binomial(e, Exponent{}) == 1);
}

TEST_CASE("chart maps: pull-back and composition") {
  const ChartMap translate({rf("z1 + 1")}, {rf("z1 - 1")});
  const ChartMap scale({rf("2*z1")}, {rf("z1/2")});
  CHECK(translate.pullback(rf("z1*w1")) == rf("(z1+1)*(w1+1)"));
  CHECK(translate.antihol_images()[0] == rf("w1 + 1"));
  const auto comp = translate.compose(scale);
  CHECK(comp.hol_images()[0] == rf("2*z1 + 1"));
  CHECK(comp.pullback(rf("z1")) == scale.pullback(translate.pullback(rf("z1"))));
  const ChartMap mobius({rf("1/z1")}, {rf("1/z1")});
  const Form omega = rf("1/(1+z1*w1)^2") * wedge(Form::differential(z_slot(1)), Form::differential(w_slot(1)));
  CHECK(mobius.pullback(omega) == omega);
  CHECK_THROWS_AS(ChartMap({rf("w1")}, {rf("w1")}), InputError);
  CHECK_THROWS_AS(ChartMap({rf("z1 + 1")}, {rf("z1 + 1")}), InputError);
  CHECK(ChartMap::identity(2).pullback(rf("z1*w2", 2)) == rf("z1*w2", 2));
}
