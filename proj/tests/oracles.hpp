#pragma once

// Independent closed forms used as test oracles.

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "wick/polynomial.hpp"
#include "wick/series.hpp"
#include "wick/rational_function.hpp"

namespace wick::test {

inline mpz_class falling(long x, long k) {
  mpz_class r = 1;
  for (long j = 0; j < k; ++j) r *= x - j;
  return r;
}

/// Flat Wick product of two monomials: sum_K v^|K| / K! d_z^K a d_w^K b.
inline Series<RationalFunction> flat_wick(int n, const Exponent& a, const Exponent& b, int order) {
  std::vector<std::vector<Term>> terms(static_cast<std::size_t>(order) + 1);
  Exponent k{};
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      int weight = 0;
      mpq_class coef = 1;
      Exponent e{};
      for (int l = 1; l <= n; ++l) {
        const int kk = k[z_slot(l)];
        weight += kk;
        if (a[z_slot(l)] < kk || b[w_slot(l)] < kk) return;
        mpz_class fact = 1;
        for (int x = 2; x <= kk; ++x) fact *= x;
        coef *= mpq_class(falling(a[z_slot(l)], kk) * falling(b[w_slot(l)], kk), fact);
        e[z_slot(l)] = static_cast<std::uint16_t>(a[z_slot(l)] - kk + b[z_slot(l)]);
        e[w_slot(l)] = static_cast<std::uint16_t>(a[w_slot(l)] + b[w_slot(l)] - kk);
      }
      if (weight > order) return;
      coef.canonicalize();
      terms[weight].push_back(Term{e, Scalar(coef)});
      return;
    }
    for (int x = 0; x <= order; ++x) {
      k[z_slot(j + 1)] = static_cast<std::uint16_t>(x);
      rec(j + 1);
    }
    k[z_slot(j + 1)] = 0;
  };
  rec(0);
  Series<RationalFunction> out(order);
  for (int r = 0; r <= order; ++r) out[r] = RationalFunction(Polynomial::from_terms(std::move(terms[r])));
  return out;
}

}  // namespace wick::test
