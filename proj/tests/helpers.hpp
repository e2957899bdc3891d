#pragma once

#include <random>
#include <string>

#include "wick/expression.hpp"
#include "wick/rational_function.hpp"
#include "wick/series.hpp"

namespace wick::test {

inline RationalFunction rf(const std::string& text, int n = 1) { return parse_expression(text, n); }

inline Series<RationalFunction> series(std::initializer_list<const char*> coeffs, int n = 1) {
  std::vector<RationalFunction> c;
  for (const char* s : coeffs) c.push_back(rf(s, n));
  return Series<RationalFunction>(std::move(c));
}

/// Small random rational functions from a fixed seed; denominators avoid zero.
class RandomRF {
 public:
  explicit RandomRF(unsigned seed, int dimension = 1) : gen_(seed), n_(dimension) {}

  Polynomial polynomial(int terms, int max_exp) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, max_exp), slot(0, 2 * n_ - 1), imag(0, 3);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
      Exponent e{};
      for (int k = 0; k < 2; ++k) {
        const int s = slot(gen_);
        const int phys = s < n_ ? z_slot(s + 1) : w_slot(s - n_ + 1);
        e[phys] = static_cast<std::uint16_t>(expo(gen_));
      }
      const Scalar c = imag(gen_) == 0 ? Scalar(mpq_class(0), mpq_class(coef(gen_))) : Scalar(coef(gen_));
      p += Polynomial::monomial(e, c);
    }
    return p;
  }

  RationalFunction next() {
    Polynomial num = polynomial(3, 2);
    Polynomial den = polynomial(2, 2) + Polynomial(1) * Scalar(5);
    if (den.is_zero()) den = Polynomial(1);
    return RationalFunction(num, den);
  }

 private:
  std::mt19937 gen_;
  int n_;
};

}  // namespace wick::test
