#include "multiassoc/multitriangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace multiassoc {

bool crossing(Diagonal d1, Diagonal d2) {
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

bool is_relevant(int k, int n, Diagonal d) {
    int m = polygon_size(k, n);
    return 1 <= d.a && d.a < d.b && d.b <= m && d.b - d.a >= k + 1 && m - (d.b - d.a) >= k + 1;
}

std::vector<Diagonal> relevant_diagonals(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("relevant_diagonals: need k >= 0, n >= 1");
    int m = polygon_size(k, n);
    std::vector<Diagonal> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (is_relevant(k, n, {a, b})) out.push_back({a, b});
    return out;
}

namespace {

using Mask = std::uint64_t;

// does `pool` contain `size` mutually crossing diagonals
bool has_clique(const std::vector<Mask>& cross, Mask pool, int size) {
    if (size == 0) return true;
    if (__builtin_popcountll(pool) < size) return false;
    for (Mask p = pool; p; p &= p - 1) {
        int v = __builtin_ctzll(p);
        Mask rest = p & ~(Mask{1} << v);
        if (has_clique(cross, rest & cross[v], size - 1)) return true;
    }
    return false;
}

}  // namespace

std::vector<Multitriangulation> enumerate_k_triangulations(int k, int n) {
    auto diags = relevant_diagonals(k, n);
    const int L = static_cast<int>(diags.size());
    if (L > kMaxOracleDiagonals)
        throw std::length_error("oracle instance too large: " + std::to_string(L) + " relevant diagonals");
    std::vector<Mask> cross(L, 0);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            if (crossing(diags[i], diags[j])) cross[i] |= Mask{1} << j;

    // adding v to S is admissible iff the crossing neighbours of v in S hold no k-clique
    auto addable = [&](Mask S, int v) { return !has_clique(cross, S & cross[v], k); };

    std::vector<Multitriangulation> out;
    std::function<void(int, Mask)> rec = [&](int v, Mask S) {
        if (v == L) {
            for (int u = 0; u < L; ++u)
                if (!((S >> u) & 1u) && addable(S, u)) return;
            Multitriangulation t;
            for (int u = 0; u < L; ++u)
                if ((S >> u) & 1u) t.push_back(diags[u]);
            if (static_cast<int>(t.size()) != k * n)
                throw std::logic_error("purity violated: maximal set of size " + std::to_string(t.size()));
            out.push_back(std::move(t));
            return;
        }
        if (addable(S, v)) rec(v + 1, S | (Mask{1} << v));
        rec(v + 1, S);
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int diagonal_to_position(int k, int n, Diagonal d) {
    if (!is_relevant(k, n, d)) throw std::invalid_argument("diagonal is not k-relevant");
    int j = d.b - d.a - k;
    if (d.a <= k) return (d.a - 1) * n + j;
    int i = d.a - k;
    return (k + i - 1) * n - (i - 1) * (i - 2) / 2 + j;
}

Diagonal position_to_diagonal(int k, int n, int position) {
    if (position < 1) throw std::invalid_argument("position out of range");
    if (position <= k * n) {
        int a = (position - 1) / n + 1, j = (position - 1) % n + 1;
        return {a, a + k + j};
    }
    int rest = position - k * n;
    for (int i = 1; i <= n; ++i) {
        int row = n + 1 - i;
        if (rest <= row) return {i + k, i + k + k + rest};
        rest -= row;
    }
    throw std::invalid_argument("position out of range");
}

Facet to_facet(int k, int n, const Multitriangulation& t) {
    std::vector<int> pos;
    for (Diagonal d : t) pos.push_back(diagonal_to_position(k, n, d));
    return Facet::from_positions(pos);
}

Diagonal shift_diagonal(int m, Diagonal d, int shift) {
    auto f = [&](int v) { return ((v - 1 + shift) % m + m) % m + 1; };
    int a = f(d.a), b = f(d.b);
    return {std::min(a, b), std::max(a, b)};
}

std::string format_multitriangulation(const Multitriangulation& t) {
    Multitriangulation s = t;
    std::sort(s.begin(), s.end());
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " " : "") + std::to_string(s[i].a) + "-" + std::to_string(s[i].b);
    return out;
}

}  // namespace multiassoc
