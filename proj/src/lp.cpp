#include "multiassoc/lp.hpp"

#include <stdexcept>

namespace multiassoc {

bool positive_feasible(const std::vector<std::vector<Rational>>& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return true;
    const int n = static_cast<int>(a[0].size());
    // a row without a positive entry can never reach 1
    for (const auto& row : a) {
        bool pos = false;
        for (const auto& x : row) pos |= x > 0;
        if (!pos) return false;
    }
    // variables: mu (n), surplus s (m), artificial t (m); A mu - s + t = 1, minimise sum t
    const int vars = n + 2 * m;
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(vars + 1));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = -1;
        tab[i][n + m + i] = 1;
        tab[i][vars] = 1;
        basis[i] = n + m + i;
    }
    // reduced costs of the phase-1 objective
    std::vector<Rational> cost(vars + 1);
    for (int j = 0; j <= vars; ++j) {
        if (j >= n + m && j < vars) continue;
        for (int i = 0; i < m; ++i) cost[j] -= tab[i][j];
    }
    for (;;) {
        int enter = -1;
        for (int j = 0; j < vars; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][vars] / tab[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-1 simplex unbounded");
        Rational inv = 1 / tab[leave][enter];
        for (auto& x : tab[leave]) x *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (int j = 0; j <= vars; ++j)
                if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (int j = 0; j <= vars; ++j)
                if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    return cost[vars] == 0;
}

}  // namespace multiassoc
