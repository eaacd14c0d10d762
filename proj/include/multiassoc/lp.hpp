#pragma once

#include <vector>

#include "multiassoc/rational.hpp"

namespace multiassoc {

// Is there mu >= 0 with A mu >= 1 componentwise? Exact phase-1 simplex with Bland's rule.
// `a` is row-major, rows x cols.
bool positive_feasible(const std::vector<std::vector<Rational>>& a);

}  // namespace multiassoc
