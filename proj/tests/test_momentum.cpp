#include "actions.hpp"
#include "charts.hpp"
#include "doctest.h"
#include "wick/error.hpp"

using namespace wick;
using namespace wick::test;

namespace {

FunctionCochain cochain(std::initializer_list<const char*> values, int order) {
  FunctionCochain out;
  for (const char* v : values) out.emplace_back(order, rf(v));
  return out;
}

/// Rotation-invariant order-1 correction with K_1 = z1 w1 dz1^dw1.
Chart flat_with_invariant_correction() { return Chart(1, 2, {{rf("w1")}, {rf("z1*w1^2/2")}}); }

}  // namespace

TEST_CASE("action validation") {
  CHECK(validate_action(flat1(), translations()).ok());
  CHECK(validate_action(fs(), rotation_action()).ok());
  CHECK(validate_action(fs(), su2()).ok());

  SUBCASE("wrong structure constant") {
    LieAction bad = su2();
    bad.structure[2][0][1] = Scalar(2);
    bad.structure[2][1][0] = Scalar(-2);
    const auto rep = validate_action(fs(), bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.first_failure().find("anti-homomorphism") != std::string::npos);
  }
  SUBCASE("not antisymmetric") {
    LieAction bad = su2();
    bad.structure[2][1][0] = Scalar(4);
    CHECK(validate_action(fs(), bad).first_failure().find("antisymmetry") == 0);
  }
  SUBCASE("Jacobi") {
    LieAction bad = LieAction::abelian({rotation(), rotation(), rotation()});
    bad.structure[2][0][1] = Scalar(1);
    bad.structure[2][1][0] = Scalar(-1);
    bad.structure[0][0][2] = Scalar(1);
    bad.structure[0][2][0] = Scalar(-1);
    CHECK(validate_action(fs(), bad).first_failure().find("Jacobi") == 0);
  }
  SUBCASE("non-holomorphic field") {
    const auto rep = validate_action(flat1(), LieAction::abelian({field1("w1", "0")}));
    CHECK(rep.first_failure().find("holomorphy") == 0);
  }
  CHECK_THROWS_AS(require_valid(flat2(1), translations()), InputError);
}

TEST_CASE("quantum Hamiltonians") {
  const auto flat = quantum_hamiltonian(flat1(), translations(), 2);
  REQUIRE(flat.j);
  CHECK((*flat.j)[0] == FormalFunction(2, rf("w1-z1")));
  CHECK((*flat.j)[1] == FormalFunction(2, rf("i*(w1+z1)")));

  const auto fsr = quantum_hamiltonian(fs(), rotation_action(), 2);
  REQUIRE(fsr.j);
  CHECK((*fsr.j)[0] == FormalFunction(2, rf("-i/(1+z1*w1)")));

  SUBCASE("restricted ansatz fails at the first order it cannot reach") {
    const Chart c(1, 1, {{rf("w1")}, {rf("z1*w1^2")}});
    const auto r = quantum_hamiltonian(c, rotation_action(), 1, PrimitiveAnsatz{2, 1});
    CHECK_FALSE(r.j);
    REQUIRE(r.not_found);
    CHECK(*r.not_found == std::make_pair(0, 1));
    const auto full = quantum_hamiltonian(c, rotation_action(), 1);
    REQUIRE(full.j);
    CHECK((*full.j)[0][1] == rf("i*z1^2*w1^2"));
  }

  CHECK_THROWS_AS(quantum_hamiltonian(fs(), translations(), 1), InputError);
}

TEST_CASE("quantum Hamiltonian certificate") {
  CHECK(verify_quantum_hamiltonian(flat1(), rotation_action(), cochain({"i*z1*w1"}, 3), 3).holds);
  CHECK(verify_quantum_hamiltonian(flat1(), rotation_action(), cochain({"i*z1*w1+7"}, 3), 3).holds);
  const auto off = verify_quantum_hamiltonian(flat1(), rotation_action(), cochain({"i*z1*w1+z1"}, 3), 3);
  CHECK_FALSE(off.holds);
  REQUIRE(off.witness);
  CHECK(off.witness->find("xi1") == 0);
}

TEST_CASE("lambda for translations") {
  const auto j = cochain({"w1-z1", "i*(w1+z1)"}, 2);
  const Cochain2 lam = lambda_cocycle(flat1(), translations(), j);
  CHECK(lam.at(0, 1)[0] == Scalar(0, -2));
  CHECK(lam.at(0, 1)[1].is_zero());
  CHECK(lam.at(1, 0)[0] == Scalar(0, 2));

  const auto cob = solve_coboundary(translations(), lam);
  CHECK(cob.obstructed());
  CHECK(cob.obstructed_order == 0);
  CHECK(cob.h1 == 2);
  CHECK(cob.h2 == 1);

  const auto mm = momentum_map(flat1(), translations(), 2);
  CHECK_FALSE(mm.found());
  CHECK(mm.stage == "solve_coboundary");

  // Constant shifts do not change lambda for an abelian algebra.
  const auto shifted = cochain({"w1-z1+3", "i*(w1+z1)-2*i"}, 2);
  CHECK(lambda_cocycle(flat1(), translations(), shifted).at(0, 1) == lam.at(0, 1));
  CHECK(verify_quantum_hamiltonian(flat1(), translations(), shifted, 2).holds);
}

TEST_CASE("single field: lambda vanishes, tau is not unique") {
  const auto j = cochain({"i*z1*w1"}, 2);
  const Cochain2 lam = lambda_cocycle(flat1(), rotation_action(), j);
  CHECK(lam.values.empty());
  const auto cob = solve_coboundary(rotation_action(), lam);
  REQUIRE(cob.tau);
  CHECK(cob.h1 == 1);
  CHECK(verify_equivariance(flat1(), rotation_action(), cochain({"i*z1*w1+5"}, 2), 2).holds);
  const auto mm = momentum_map(flat1(), rotation_action(), 2);
  REQUIRE(mm.found());
  CHECK(mm.equivariance.holds);
}

TEST_CASE("su(2) on the projective line") {
  const LieAction act = su2();
  const auto qh = quantum_hamiltonian(fs(), act, 2);
  REQUIRE(qh.j);
  const Cochain2 lam = lambda_cocycle(fs(), act, *qh.j);

  // Independent check of lambda: (1/v)[J_a, J_b] - J_[a,b] from the product itself.
  const StarProduct sp(fs(), 3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const FormalFunction ja = (*qh.j)[a].truncated(3), jb = (*qh.j)[b].truncated(3);
      const FormalFunction comm = sp.ad(ja, jb).divided_by_nu() - on_bracket(act, *qh.j, a, b);
      for (int s = 0; s <= 2; ++s) CHECK(comm[s] == RationalFunction(lam.at(a, b)[s]));
    }

  const auto cob = solve_coboundary(act, lam);
  CHECK(cob.h1 == 0);
  CHECK(cob.h2 == 0);
  REQUIRE(cob.tau);
  CHECK(coboundary(act, *cob.tau).values == lam.values);

  const auto mm = momentum_map(fs(), act, 2);
  REQUIRE(mm.found());
  CHECK(mm.equivariance.holds);
  CHECK(mm.hamiltonian_check.holds);
  CHECK(mm.correction.holds);

  SUBCASE("constant shifts move lambda by a coboundary") {
    FunctionCochain shifted = *qh.j;
    std::vector<ScalarSeries> c(3, ScalarSeries(2));
    c[0][0] = Scalar(3);
    c[1][1] = Scalar(0, 5);
    c[2][0] = Scalar(-1, 2);
    for (int i = 0; i < 3; ++i)
      for (int s = 0; s <= 2; ++s) shifted[i][s] += RationalFunction(c[i][s]);
    const Cochain2 lam2 = lambda_cocycle(fs(), act, shifted);
    const Cochain2 dc = coboundary(act, c);
    for (const auto& [jk, v] : lam.values) CHECK(lam2.values.at(jk) == v + dc.values.at(jk));
    CHECK_FALSE(solve_coboundary(act, lam2).obstructed());
  }
}

TEST_CASE("strong invariance") {
  const auto flat = check_strong_invariance(flat1(), translations(), {rf("w1-z1"), rf("i*(w1+z1)")}, 3);
  CHECK(flat.strongly_invariant);
  REQUIRE(flat.certificate);
  CHECK(flat.certificate->holds);
  REQUIRE(flat.correction);
  CHECK(flat.correction->holds);

  const auto corrected = check_strong_invariance(flat_with_invariant_correction(), rotation_action(), {rf("i*z1*w1")}, 2);
  CHECK_FALSE(corrected.strongly_invariant);
  CHECK(corrected.first_nonzero[0] == 1);

  std::vector<RationalFunction> j0;
  const auto classical = quantum_hamiltonian(fs(), su2(), 0);
  for (const auto& f : *classical.j) j0.push_back(f[0]);
  const auto bt = check_strong_invariance(berezin_toeplitz(fs()), su2(), j0, 2);
  CHECK_FALSE(bt.strongly_invariant);

  CHECK_THROWS_AS(check_strong_invariance(flat1(), rotation_action(), {rf("z1")}, 1), InputError);
}

TEST_CASE("momentum from the potential") {
  const auto flat = potential_momentum(flat_with_v(2), rotation_action());
  REQUIRE(flat.j);
  CHECK((*flat.j)[0][0] == rf("i*z1*w1"));
  CHECK(flat.primitive_ok);
  CHECK(flat.lambda_zero);

  const auto fsv = potential_momentum(fs_with_v(2), rotation_action());
  REQUIRE(fsv.j);
  CHECK((*fsv.j)[0][0] == rf("i*z1*w1/(1+z1*w1)"));
  CHECK((*fsv.j)[0][0] - rf("-i/(1+z1*w1)") == rf("i"));

  const auto zero = potential_momentum(flat_with_v(1), LieAction::abelian({field1("0", "0")}));
  REQUIRE(zero.j);
  CHECK((*zero.j)[0].is_zero());

  const auto moved = potential_momentum(flat_with_v(1), translations());
  CHECK(moved.invariant == std::vector<bool>{false, false});
  CHECK_FALSE(moved.j);

  CHECK_THROWS_AS(potential_momentum(flat1(), rotation_action()), InputError);
}

TEST_CASE("Berezin-Toeplitz") {
  const Chart flat_bt = berezin_toeplitz(flat1(2));
  CHECK(flat_bt.u(1)[0].is_zero());

  const Chart fs_bt = berezin_toeplitz(fs());
  CHECK(fs_bt.u(1)[0] == rf("-2*w1/(1+z1*w1)"));
  CHECK(karabegov_form(fs_bt)[1] == Scalar(-2) * kahler_form(fs()));

  CHECK(bt_divergence_term(fs(), rotation()) == rf("(z1*w1-1)/(2*(1+z1*w1))"));

  const auto rot = bt_momentum(fs(), rotation_action(), 2);
  CHECK(rot.contraction_ok == std::vector<bool>{true});
  CHECK(rot.hamiltonian_check.holds);

  const auto s = bt_momentum(fs(), su2(), 2);
  CHECK(s.holds());
  CHECK(s.pairing_ok.size() == 3);

  const auto fl = bt_momentum(flat1(2), translations(), 2);
  CHECK(fl.holds());
  CHECK(fl.j[0].is_zero());
  CHECK(fl.quantum[1] == FormalFunction(2, rf("i*(w1+z1)")));
}
