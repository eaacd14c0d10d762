#pragma once

#include <compare>
#include <string>
#include <vector>

#include "multiassoc/subword_complex.hpp"

namespace multiassoc {

// Diagonal (a,b), 1 <= a < b <= m, of a convex m-gon labelled counterclockwise.
struct Diagonal {
    int a = 0;
    int b = 0;
    auto operator<=>(const Diagonal&) const = default;
};

using Multitriangulation = std::vector<Diagonal>;

inline int polygon_size(int k, int n) { return n + 2 * k + 1; }

bool crossing(Diagonal d1, Diagonal d2);
bool is_relevant(int k, int n, Diagonal d);
std::vector<Diagonal> relevant_diagonals(int k, int n);

// Backtracking oracle; throws std::length_error beyond kMaxOracleDiagonals relevant diagonals.
constexpr int kMaxOracleDiagonals = 30;
std::vector<Multitriangulation> enumerate_k_triangulations(int k, int n);

int diagonal_to_position(int k, int n, Diagonal d);
Diagonal position_to_diagonal(int k, int n, int position);
Facet to_facet(int k, int n, const Multitriangulation& t);

// cyclic relabelling v -> v + shift of the m-gon, endpoints re-sorted
Diagonal shift_diagonal(int m, Diagonal d, int shift);

std::string format_multitriangulation(const Multitriangulation& t);

}  // namespace multiassoc
