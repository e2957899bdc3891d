#pragma once

#include <optional>
#include <vector>

#include "wick/rational_function.hpp"

namespace wick {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves A x = b exactly. Columns are pivoted left to right and free
/// unknowns are set to zero, so earlier columns are preferred. Returns
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(Matrix<Scalar> a, std::vector<Scalar> b);

std::size_t rank(Matrix<Scalar> a);

struct MatrixInverse {
  Matrix<RationalFunction> inverse;
  RationalFunction determinant;
};

/// Gauss-Jordan inversion over rational functions; throws
/// MathError("singular matrix") when the determinant vanishes identically.
MatrixInverse invert(const Matrix<RationalFunction>& m);

RationalFunction determinant(const Matrix<RationalFunction>& m);

}  // namespace wick
