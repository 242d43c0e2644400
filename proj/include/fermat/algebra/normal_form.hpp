#pragma once

#include <cstddef>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"

namespace fermat {

struct HermiteForm {
  IntegerMatrix H;  // same shape as the input, zero rows last
  IntegerMatrix U;  // unimodular, H = U * M
};

struct SmithForm {
  IntegerMatrix D;  // diagonal, d1 | d2 | ...
  IntegerMatrix S;
  IntegerMatrix T;  // D = S * M * T
};

/// Row-style HNF: positive pivots, entries above each pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// Nonzero rows of the canonical HNF of the row span of m.  Tries a checked
/// 64-bit pass first and falls back to GMP on overflow.
IntegerMatrix hermite_basis(const IntegerMatrix& m);

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Elementary divisors only (nonzero diagonal of the SNF).
std::vector<Integer> elementary_divisors(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Pivot column of each row of a matrix in row echelon form.
std::vector<std::size_t> pivot_columns(const IntegerMatrix& echelon);

}  // namespace fermat
