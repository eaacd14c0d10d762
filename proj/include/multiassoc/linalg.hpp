#pragma once

#include <vector>

#include "multiassoc/rational.hpp"
#include "multiassoc/rays.hpp"

namespace multiassoc {

// Integer column vectors; positive rescaling of rays keeps ranks and orientation signs.
using IntColumn = std::vector<Integer>;
IntColumn primitive_integer(const RayVec& v);

struct EliminationResult {
    int rank = 0;
    int det_sign = 0;  // sign of the determinant when square and full rank, else 0
};

// Bareiss elimination on the matrix whose columns are `columns`; tries an
// overflow-checked __int128 pass first and falls back to GMP integers.
EliminationResult eliminate(const std::vector<const IntColumn*>& columns, int rows);

int rank(const std::vector<RayVec>& vectors);
// Exact null-space basis of the matrix whose columns are `vectors`, each basis vector
// primitive integral with positive last nonzero free coordinate.
std::vector<RayVec> kernel(const std::vector<RayVec>& vectors);

// Gauss-Jordan over the rationals eliminating columns right to left; independent of
// kernel() and used to cross-check it.
std::vector<RayVec> kernel_reference(const std::vector<RayVec>& vectors);

// Inverse of a square full-rank matrix given by columns.
std::vector<std::vector<Rational>> inverse(const std::vector<RayVec>& columns);

}  // namespace multiassoc
