#include "multiassoc/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace multiassoc {

namespace {

struct Overflow {};

// __int128 that throws Overflow instead of wrapping
struct Checked {
    __int128 v = 0;
};

Checked mul(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
Checked sub(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
Checked divexact(Checked a, Checked b) { return {a.v / b.v}; }
bool is_zero(Checked a) { return a.v == 0; }
int sgn(Checked a) { return (a.v > 0) - (a.v < 0); }

Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer sub(const Integer& a, const Integer& b) { return a - b; }
Integer divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
bool is_zero(const Integer& a) { return a == 0; }
int sgn(const Integer& a) { return ::sgn(a); }

template <class T>
EliminationResult bareiss(std::vector<std::vector<T>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    T prev{};
    prev = T{1};
    int sign = 1, r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) m[i][j] = divexact(sub(mul(m[r][c], m[i][j]), mul(m[i][c], m[r][j])), prev);
            m[i][c] = T{};
        }
        prev = m[r][c];
        ++r;
    }
    EliminationResult res{r, 0};
    if (rows == cols && r == rows) res.det_sign = sign * sgn(m[rows - 1][cols - 1]);
    return res;
}

Checked to_checked(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return {static_cast<__int128>(z.get_si())};
}

}  // namespace

IntColumn primitive_integer(const RayVec& v) {
    Integer l = 1;
    for (const auto& x : v.coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntColumn out;
    Integer g = 0;
    for (const auto& x : v.coords) {
        Integer y = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
        out.push_back(std::move(y));
    }
    if (g > 1)
        for (auto& y : out) mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
    return out;
}

EliminationResult eliminate(const std::vector<const IntColumn*>& columns, int rows) {
    const int cols = static_cast<int>(columns.size());
    for (const auto* c : columns)
        if (static_cast<int>(c->size()) != rows) throw std::invalid_argument("eliminate: dimension mismatch");
    try {
        std::vector<std::vector<Checked>> m(rows, std::vector<Checked>(cols));
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) m[i][j] = to_checked((*columns[j])[i]);
        return bareiss(std::move(m));
    } catch (const Overflow&) {
        std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) m[i][j] = (*columns[j])[i];
        return bareiss(std::move(m));
    }
}

namespace {

int common_dimension(const std::vector<RayVec>& vectors) {
    if (vectors.empty()) return 0;
    int d = vectors.front().dimension();
    for (const auto& v : vectors)
        if (v.dimension() != d) throw std::invalid_argument("vectors of different dimensions");
    return d;
}

}  // namespace

int rank(const std::vector<RayVec>& vectors) {
    int d = common_dimension(vectors);
    std::vector<IntColumn> cols;
    for (const auto& v : vectors) cols.push_back(primitive_integer(v));
    std::vector<const IntColumn*> ptr;
    for (const auto& c : cols) ptr.push_back(&c);
    return eliminate(ptr, d).rank;
}

namespace {

// primitive integral, sign fixed by the last nonzero entry being positive
RayVec normalize_direction(std::vector<Rational> v) {
    RayVec r(std::move(v));
    IntColumn z = primitive_integer(r);
    int last = static_cast<int>(z.size()) - 1;
    while (last >= 0 && z[last] == 0) --last;
    RayVec out;
    for (auto& x : z) out.coords.emplace_back(last >= 0 && z[last] < 0 ? Integer(-x) : x);
    return out;
}

}  // namespace

std::vector<RayVec> kernel(const std::vector<RayVec>& vectors) {
    const int rows = common_dimension(vectors);
    const int cols = static_cast<int>(vectors.size());
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    // column j is scaled by scale[j] > 0; kernel coordinates are scaled back at the end
    std::vector<Rational> scale(cols, Rational(1));
    for (int j = 0; j < cols; ++j) {
        IntColumn c = primitive_integer(vectors[j]);
        for (int i = 0; i < rows; ++i) {
            m[i][j] = c[i];
            if (c[i] != 0 && scale[j] == 1) scale[j] = Rational(c[i]) / vectors[j].coords[i];
        }
    }
    // fraction-free forward elimination, remembering pivot columns
    std::vector<int> pivots;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) m[i][j] = divexact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RayVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free] = 1;
        for (int t = r - 1; t >= 0; --t) {
            int pc = pivots[t];
            Rational s = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (x[j] != 0) s += Rational(m[t][j]) * x[j];
            x[pc] = -s / Rational(m[t][pc]);
        }
        for (int j = 0; j < cols; ++j) x[j] *= scale[j];
        basis.push_back(normalize_direction(std::move(x)));
    }
    return basis;
}

std::vector<RayVec> kernel_reference(const std::vector<RayVec>& vectors) {
    const int rows = common_dimension(vectors);
    const int cols = static_cast<int>(vectors.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m[i][j] = vectors[j].coords[i];
    std::vector<int> pivot_of_row;
    int r = 0;
    for (int c = cols - 1; c >= 0 && r < rows; --c) {
        int piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_of_row) is_pivot[c] = true;
    std::vector<RayVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free] = 1;
        for (int t = 0; t < r; ++t) x[pivot_of_row[t]] = -m[t][free];
        basis.push_back(normalize_direction(std::move(x)));
    }
    return basis;
}

std::vector<std::vector<Rational>> inverse(const std::vector<RayVec>& columns) {
    const int d = common_dimension(columns);
    if (static_cast<int>(columns.size()) != d) throw std::invalid_argument("inverse: matrix not square");
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = columns[j].coords[i];
        m[i][d + i] = 1;
    }
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (piv < d && m[piv][c] == 0) ++piv;
        if (piv == d) throw std::domain_error("inverse: matrix is singular");
        std::swap(m[piv], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = 0; j < 2 * d; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i][j] = m[i][d + j];
    return out;
}

}  // namespace multiassoc
