// wick: command-line front end for the star-product library.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wick/error.hpp"
#include "wick/expression.hpp"
#include "wick/io.hpp"
#include "wick/momentum.hpp"
#include "wick/star_product.hpp"
#include "wick/symmetry.hpp"

using namespace wick;

namespace {

enum Exit { kHolds = 0, kFails = 1, kInvalid = 2, kInconclusive = 3 };

struct Options {
  std::string chart, left, right, field, map, action, candidate, property;
  std::string format = "text";
  int order = 4;
  int dmax = -1;
  std::optional<int> degree;
  int den_power = 1;
  std::vector<std::string> j0;
};

struct Outcome {
  int code = kHolds;
  Json report = Json::object();
  std::ostringstream text;
};

std::string xi(int i) { return "xi" + std::to_string(i + 1); }

PrimitiveAnsatz ansatz(const Options& o) { return PrimitiveAnsatz{o.degree, o.den_power}; }

void add_check(Outcome& out, const CheckReport& r) {
  out.report["checks"].push_back(check_json(r));
  out.text << r.name << ": " << (r.holds ? "holds" : "FAILS") << " (" << r.cases << " cases)\n";
  if (r.witness) out.text << "  witness: " << *r.witness << "\n";
  if (!r.holds) out.code = kFails;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void cmd_star(const Options& o, Outcome& out) {
  const Chart c = load_chart(o.chart);
  const int n = c.dimension();
  const StarProduct sp(c, o.order);
  const auto p = sp.star(parse_expression(o.left, n), parse_expression(o.right, n));
  out.report["left"] = o.left;
  out.report["right"] = o.right;
  out.report["product"] = series_json(p);
  out.text << to_string(p) << "\n";
}

void cmd_karabegov(const Options& o, Outcome& out) {
  const auto k = karabegov_form(load_chart(o.chart).with_order(o.order));
  out.report["karabegov"] = Json::array();
  for (int s = 0; s <= k.order(); ++s) {
    out.report["karabegov"].push_back(k[s].to_string());
    out.text << "K_" << s << " = " << k[s].to_string() << "\n";
  }
}

void cmd_verify(const Options& o, Outcome& out) {
  const StarProduct sp(load_chart(o.chart), o.order);
  const int dmax = o.dmax < 0 ? o.order : o.dmax;
  out.report["property"] = o.property;
  if (o.property == "assoc") add_check(out, verify_associativity(sp, dmax));
  else if (o.property == "wick-type") add_check(out, verify_wick_type(sp, dmax));
  else if (o.property == "defining") add_check(out, verify_defining_relation(sp, dmax));
  else add_check(out, verify_roundtrip(sp));
}

void cmd_invariance(const Options& o, Outcome& out) {
  const auto rep = check_derivation(load_chart(o.chart), load_field(o.field), o.order);
  out.report["holomorphic"] = rep.holomorphic;
  out.report["lie_k_zero"] = rep.lie_k_zero;
  out.text << "Lie_X I = 0: " << yes(rep.holomorphic) << "\n";
  for (std::size_t s = 0; s < rep.lie_k_zero.size(); ++s)
    out.text << "Lie_X K_" << s << " = 0: " << yes(rep.lie_k_zero[s]) << "\n";
  add_check(out, rep.certificate);
  out.report["derivation"] = rep.is_derivation();
  out.text << (rep.is_derivation() ? "derivation\n" : "not a derivation\n");
}

void cmd_automorphism(const Options& o, Outcome& out) {
  const auto rep = check_automorphism(load_chart(o.chart), load_map(o.map), o.order);
  out.report["pullback_preserves_k"] = rep.pullback_preserves_k;
  for (std::size_t s = 0; s < rep.pullback_preserves_k.size(); ++s)
    out.text << "phi* K_" << s << " = K_" << s << ": " << yes(rep.pullback_preserves_k[s]) << "\n";
  add_check(out, rep.certificate);
  out.report["automorphism"] = rep.certificate.holds;
  out.text << (rep.certificate.holds ? "automorphism\n" : "not an automorphism\n");
}

void cmd_quasi_inner(const Options& o, Outcome& out) {
  const Chart c = load_chart(o.chart);
  const VectorField x = load_field(o.field);
  if (x.dimension() != c.dimension()) throw InputError("field dimension does not match the chart");
  const auto k = karabegov_form(c.with_order(o.order));
  FormalFunction a(o.order);
  for (int s = 0; s <= o.order; ++s) {
    if (s == 0 && !o.candidate.empty()) {
      a[0] = parse_expression(o.candidate, c.dimension());
      continue;
    }
    const auto p = find_primitive(interior_product(x, k[s]), c.dimension(), ansatz(o));
    if (!p) {
      out.code = kInconclusive;
      out.report["not_found_order"] = s;
      out.text << "NOT_FOUND: no primitive of i_X K_" << s << " within the ansatz\n";
      return;
    }
    a[s] = *p;
  }
  const auto rep = check_quasi_inner(c, x, a, o.order);
  out.report["a"] = series_json(a);
  out.text << "a = " << to_string(a) << "\n";
  out.report["primitive_failure"] = rep.primitive_failure ? Json(*rep.primitive_failure) : Json(nullptr);
  out.report["hamiltonian_matches"] = rep.hamiltonian_matches;
  if (rep.primitive_failure) out.text << "d a != i_X K at order " << *rep.primitive_failure << "\n";
  out.text << "X = X_{a_0}: " << yes(rep.hamiltonian_matches) << "\n";
  add_check(out, rep.certificate);
  if (!rep.holds()) out.code = kFails;
  out.report["quasi_inner"] = rep.holds();
}

void cmd_qmm(const Options& o, Outcome& out) {
  const Chart c = load_chart(o.chart);
  const LieAction act = load_action(o.action);
  const auto res = momentum_map(c, act, o.order, ansatz(o));
  out.report["stage"] = res.stage;
  if (res.hamiltonian.not_found) {
    const auto [i, s] = *res.hamiltonian.not_found;
    out.code = kInconclusive;
    out.report["not_found"] = {{"basis", i + 1}, {"order", s}};
    out.text << "NOT_FOUND: quantum Hamiltonian for " << xi(i) << " at order " << s << "\n";
    return;
  }
  Json jj = Json::array();
  for (int i = 0; i < act.m; ++i) {
    jj.push_back(series_json((*res.hamiltonian.j)[i]));
    out.text << "J(" << xi(i) << ") = " << to_string((*res.hamiltonian.j)[i]) << "\n";
  }
  out.report["quantum_hamiltonian"] = jj;
  Json lam = Json::array();
  for (const auto& [jk, v] : res.lambda->values) {
    lam.push_back({{"pair", {jk.first + 1, jk.second + 1}}, {"value", scalar_series_json(v)}});
    out.text << "lambda(" << xi(jk.first) << "," << xi(jk.second) << ") = " << render(v) << "\n";
  }
  out.report["lambda"] = lam;
  const auto& cob = *res.coboundary;
  out.report["h1"] = cob.h1;
  out.report["h2"] = cob.h2;
  out.text << "dim H^1 = " << cob.h1 << ", dim H^2 = " << cob.h2 << "\n";
  if (cob.obstructed()) {
    out.code = kFails;
    out.report["obstructed_order"] = *cob.obstructed_order;
    out.text << "OBSTRUCTED:";
    bool first = true;
    for (const auto& [jk, v] : res.lambda->values) {
      if (v.is_zero()) continue;
      out.text << (first ? " " : ", ") << "[λ](ξ" << jk.first + 1 << ",ξ" << jk.second + 1 << ") = " << render(v);
      first = false;
    }
    out.text << "\n";
    return;
  }
  Json tau = Json::array(), jt = Json::array();
  for (int i = 0; i < act.m; ++i) {
    tau.push_back(scalar_series_json((*cob.tau)[i]));
    jt.push_back(series_json((*res.j_tau)[i]));
    out.text << "tau(" << xi(i) << ") = " << render((*cob.tau)[i]) << "\n";
  }
  for (int i = 0; i < act.m; ++i) out.text << "J^tau(" << xi(i) << ") = " << to_string((*res.j_tau)[i]) << "\n";
  out.report["tau"] = tau;
  out.report["momentum_map"] = jt;
  add_check(out, res.equivariance);
  add_check(out, res.hamiltonian_check);
  add_check(out, res.correction);
}

std::vector<RationalFunction> classical_momenta(const Options& o, const Chart& c, const LieAction& act, Outcome& out) {
  std::vector<RationalFunction> j0;
  if (!o.j0.empty()) {
    if (static_cast<int>(o.j0.size()) != act.m) throw InputError("--j0 needs one expression per basis element");
    for (const auto& e : o.j0) j0.push_back(parse_expression(e, c.dimension()));
    return j0;
  }
  const Form omega = kahler_form(c);
  for (int i = 0; i < act.m; ++i) {
    auto p = find_primitive(interior_product(act.fields[i], omega), c.dimension(), ansatz(o));
    if (!p) {
      out.code = kInconclusive;
      out.text << "NOT_FOUND: classical Hamiltonian for " << xi(i) << "\n";
      return {};
    }
    j0.push_back(std::move(*p));
  }
  return j0;
}

void cmd_strong(const Options& o, Outcome& out) {
  const Chart c = load_chart(o.chart);
  const LieAction act = load_action(o.action);
  require_valid(c, act);
  const auto j0 = classical_momenta(o, c, act, out);
  if (out.code == kInconclusive) return;
  const auto rep = check_strong_invariance(c, act, j0, o.order);
  Json nz = Json::array();
  for (int i = 0; i < act.m; ++i) {
    const auto& b = rep.first_nonzero[i];
    nz.push_back(b ? Json(*b) : Json(nullptr));
    out.text << "J0(" << xi(i) << ") = " << j0[i].to_string() << "; i_X (K - omega) ";
    if (b) out.text << "nonzero at order " << *b << "\n";
    else out.text << "vanishes\n";
  }
  out.report["first_nonzero"] = nz;
  out.report["strongly_invariant"] = rep.strongly_invariant;
  if (rep.certificate) add_check(out, *rep.certificate);
  if (rep.correction) add_check(out, *rep.correction);
  out.text << (rep.strongly_invariant ? "strongly invariant\n" : "not strongly invariant\n");
  if (!rep.strongly_invariant) out.code = kFails;
}

void cmd_bt(const Options& o, Outcome& out) {
  const Chart c = load_chart(o.chart);
  const Chart bt = berezin_toeplitz(c);
  Json u1 = Json::array();
  for (int k = 1; k <= c.dimension(); ++k) {
    u1.push_back(bt.u(1)[k - 1].to_string());
    out.text << "u^(1)_" << k << " = " << bt.u(1)[k - 1].to_string() << "\n";
  }
  out.report["correction"] = u1;
  out.text << "K_1 = (2/i) rho: verified\n";
  if (o.action.empty()) return;
  const LieAction act = load_action(o.action);
  const auto rep = bt_momentum(c, act, o.order);
  Json js = Json::array();
  for (int i = 0; i < act.m; ++i) {
    js.push_back({{"j0", rep.j0[i].to_string()}, {"j", rep.j[i].to_string()}, {"J", series_json(rep.quantum[i])},
                  {"contraction", static_cast<bool>(rep.contraction_ok[i])}});
    out.text << "j(" << xi(i) << ") = " << rep.j[i].to_string() << "; i_X rho = d j: " << yes(rep.contraction_ok[i])
             << "\n";
  }
  for (const auto& [jk, ok] : rep.pairing_ok)
    out.text << "rho(X_" << jk.first + 1 << ", X_" << jk.second + 1 << ") = j([" << xi(jk.first) << ","
             << xi(jk.second) << "]): " << yes(ok) << "\n";
  for (int i = 0; i < act.m; ++i) out.text << "J(" << xi(i) << ") = " << to_string(rep.quantum[i]) << "\n";
  out.report["momenta"] = js;
  add_check(out, rep.hamiltonian_check);
  if (!rep.holds()) out.code = kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick-type star products on Kähler charts"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool needs_order = true) {
    s->add_option("--chart", o.chart, "chart JSON file")->required()->check(CLI::ExistingFile);
    if (needs_order) s->add_option("--order", o.order, "truncation order N")->check(CLI::NonNegativeNumber);
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto ansatz_opts = [&](CLI::App* s) {
    s->add_option("--degree", o.degree, "numerator degree bound for rational primitives");
    s->add_option("--den-power", o.den_power, "power of the denominator lcm in the ansatz")
        ->check(CLI::NonNegativeNumber);
  };

  auto* star = app.add_subcommand("star", "product of two expressions");
  common(star);
  star->add_option("--left", o.left)->required();
  star->add_option("--right", o.right)->required();

  auto* karabegov = app.add_subcommand("karabegov", "characterizing form per order");
  common(karabegov);

  auto* verify = app.add_subcommand("verify", "finite certificates for the product");
  common(verify);
  verify->add_option("property", o.property)->required()->check(CLI::IsMember({"assoc", "wick-type", "roundtrip", "defining"}));
  verify->add_option("--dmax", o.dmax, "largest exponent of the test monomials (default N)");

  auto* inv = app.add_subcommand("invariance", "is a vector field a derivation");
  common(inv);
  inv->add_option("--field", o.field)->required()->check(CLI::ExistingFile);

  auto* aut = app.add_subcommand("automorphism", "is a chart map an automorphism");
  common(aut);
  aut->add_option("--map", o.map)->required()->check(CLI::ExistingFile);

  auto* qi = app.add_subcommand("quasi-inner", "realize a derivation as (1/v) ad(a)");
  common(qi);
  qi->add_option("--field", o.field)->required()->check(CLI::ExistingFile);
  qi->add_option("--candidate", o.candidate, "order-0 part of a");
  ansatz_opts(qi);

  auto* qmm = app.add_subcommand("qmm", "quantum momentum mapping");
  common(qmm);
  qmm->add_option("--action", o.action)->required()->check(CLI::ExistingFile);
  ansatz_opts(qmm);

  auto* strong = app.add_subcommand("strong-invariance", "is the classical momentum already quantum");
  common(strong);
  strong->add_option("--action", o.action)->required()->check(CLI::ExistingFile);
  strong->add_option("--j0", o.j0, "classical momenta, one per basis element");
  ansatz_opts(strong);

  auto* bt = app.add_subcommand("bt", "Berezin-Toeplitz chart and momenta");
  common(bt);
  bt->add_option("--action", o.action)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  Outcome out;
  CLI::App* cmd = app.get_subcommands().front();
  out.report["command"] = cmd->get_name();
  out.report["order"] = o.order;
  try {
    if (cmd == star) cmd_star(o, out);
    else if (cmd == karabegov) cmd_karabegov(o, out);
    else if (cmd == verify) cmd_verify(o, out);
    else if (cmd == inv) cmd_invariance(o, out);
    else if (cmd == aut) cmd_automorphism(o, out);
    else if (cmd == qi) cmd_quasi_inner(o, out);
    else if (cmd == qmm) cmd_qmm(o, out);
    else if (cmd == strong) cmd_strong(o, out);
    else cmd_bt(o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InternalError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kFails;
  }
  out.report["exit"] = out.code;
  if (o.format == "json") std::cout << out.report.dump(2) << "\n";
  else std::cout << out.text.str();
  return out.code;
}
