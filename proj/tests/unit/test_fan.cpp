#include <doctest.h>

#include <random>
#include <stdexcept>

#include "multiassoc/fan.hpp"
#include "multiassoc/golden.hpp"
#include "multiassoc/lp.hpp"

using namespace multiassoc;

namespace {

RayVec ints(std::vector<long> v) { return RayVec::from_ints(v); }

// rank and determinant by plain rational Gaussian elimination
std::pair<int, Rational> rank_det(std::vector<RayVec> cols, int rows) {
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m[i][j] = cols[j].coords[i];
    int rank = 0;
    Rational det = 1;
    for (std::size_t j = 0; j < cols.size() && rank < rows; ++j) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][j] != 0) piv = i;
        if (piv < 0) {
            det = 0;
            continue;
        }
        if (piv != rank) {
            std::swap(m[piv], m[rank]);
            det = -det;
        }
        det *= m[rank][j];
        for (int i = rank + 1; i < rows; ++i) {
            Rational f = m[i][j] / m[rank][j];
            for (std::size_t c = j; c < cols.size(); ++c) m[i][c] -= f * m[rank][c];
        }
        ++rank;
    }
    if (rank < rows || static_cast<int>(cols.size()) != rows) det = 0;
    return {rank, det};
}

int sgn(const Rational& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

bool in_kernel(const std::vector<RayVec>& cols, const RayVec& v) {
    int rows = cols.front().dimension();
    for (int i = 0; i < rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) s += cols[j].coords[i] * v.coords[j];
        if (s != 0) return false;
    }
    return true;
}

FanStats stats_for(const char* construction, int n, int threads = 1) {
    auto idx = all_facets(multiassociahedron_word(2, n), threads);
    auto s = fan_stats(build_rays(parse_construction(construction), n), idx, threads);
    s.n = n;
    return s;
}

}  // namespace

TEST_CASE("kernel examples") {
    auto k = kernel({ints({1, -1}), ints({1, 1}), ints({-1, 0})});
    REQUIRE(k.size() == 1);
    CHECK(k.front() == ints({1, 1, 2}));
    CHECK(kernel({ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}).empty());
    CHECK_THROWS_AS(kernel({ints({1, 0}), ints({1})}), std::invalid_argument);
}

TEST_CASE("kernel agrees with the reference elimination") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int rows = 1 + rng() % 17, cols = 1 + rng() % 17;
        int spread = 1 + rng() % 4;
        std::vector<RayVec> m;
        for (int j = 0; j < cols; ++j) {
            std::vector<long> v;
            for (int i = 0; i < rows; ++i) v.push_back(static_cast<long>(rng() % (2 * spread + 1)) - spread);
            m.push_back(ints(v));
        }
        // force some dependent columns
        if (cols > 2 && trial % 3 == 0) m[cols - 1] = m[0] + m[1];
        auto a = kernel(m), b = kernel_reference(m);
        CAPTURE(trial);
        REQUIRE(a.size() == b.size());
        CHECK(static_cast<int>(a.size()) == cols - rank(m));
        for (const auto& v : a) CHECK(in_kernel(m, v));
        for (const auto& v : b) CHECK(in_kernel(m, v));
        if (!a.empty()) {
            auto both = a;
            both.insert(both.end(), b.begin(), b.end());
            CHECK(rank(both) == static_cast<int>(a.size()));
        }
    }
}

TEST_CASE("pigeonhole kernel") {
    for (int n = 1; n <= 4; ++n) {
        auto ra = build_rays(parse_construction("pattern"), n);
        std::vector<RayVec> first(ra.rays.begin(), ra.rays.begin() + 2 * n + 1);
        CHECK(kernel(first).size() >= 1);
    }
}

TEST_CASE("elimination against rational reference") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + rng() % 12;
        bool huge = trial % 5 == 0;  // forces the GMP fallback
        std::vector<RayVec> cols;
        std::vector<IntColumn> icols;
        for (int j = 0; j < d; ++j) {
            RayVec v(d);
            for (int i = 0; i < d; ++i) {
                Integer x = static_cast<long>(rng() % 7) - 3;
                if (huge) x *= Integer("1000000000000000000000000");
                v.coords[i] = x;
            }
            if (d > 1 && trial % 4 == 1 && j == d - 1) v = cols[0];
            cols.push_back(v);
        }
        for (const auto& v : cols) {
            IntColumn c;
            for (const auto& x : v.coords) c.push_back(x.get_num());
            icols.push_back(c);
        }
        std::vector<const IntColumn*> ptrs;
        for (const auto& c : icols) ptrs.push_back(&c);
        auto got = eliminate(ptrs, d);
        auto [r, det] = rank_det(cols, d);
        CAPTURE(trial);
        CHECK(got.rank == r);
        CHECK(got.det_sign == sgn(det));
    }
}

TEST_CASE("primitive integer columns") {
    RayVec v({Rational(1, 2), Rational(-3, 4), Rational(0)});
    CHECK(primitive_integer(v) == IntColumn{2, -3, 0});
}

TEST_CASE("inverse") {
    auto inv = inverse({ints({2, 0}), ints({1, 1})});
    CHECK(inv[0][0] == Rational(1, 2));
    CHECK(inv[0][1] == Rational(-1, 2));
    CHECK(inv[1][0] == 0);
    CHECK(inv[1][1] == 1);
    CHECK_THROWS(inverse({ints({1, 1}), ints({2, 2})}));
}

TEST_CASE("positive feasibility") {
    // negative orthant against positive orthant: disjoint
    CHECK_FALSE(positive_feasible({{-1, 0}, {0, -1}}));
    CHECK(positive_feasible({{1, 0}, {0, 1}}));
    CHECK(positive_feasible({{1, -1}, {0, 1}}));
    CHECK_FALSE(positive_feasible({{1, -1}, {-1, 1}}));
    CHECK_FALSE(positive_feasible({{0, 0}, {1, 1}}));
    // mu = (9, 2) gives exactly (1, 1); with -2 the two rows contradict
    CHECK(positive_feasible({{Rational(1, 3), -1}, {-1, 5}}));
    CHECK_FALSE(positive_feasible({{Rational(1, 3), -2}, {-1, 5}}));
}

TEST_CASE("pattern fan for n=1") {
    auto ra = build_rays(parse_construction("pattern"), 1);
    CHECK(facet_rank(ra, Facet::from_positions({1, 2})) == 2);
    auto idx = all_facets(ra.word);
    for (const auto& e : idx.dual_edges()) {
        Facet f = idx.facets()[e.first], g = idx.facets()[e.second];
        auto a = classify_ridge(ra, f, g), b = classify_ridge(ra, g, f);
        CHECK(a.status == RidgeStatus::Good);
        CHECK(b.status == RidgeStatus::Good);
        REQUIRE(a.dependence.size() == 3);
        for (const auto& x : a.dependence) CHECK(x > 0);
    }
    auto c1 = condition_one(ra, idx, Facet::from_positions({1, 2}));
    CHECK(c1.holds);
    CHECK(c1.checked == 2);
    CHECK_THROWS_AS(classify_ridge(ra, Facet::from_positions({1, 2}), Facet::from_positions({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("condition one detects overlapping cones") {
    // s1 s1 s1: facets are the three pairs; the cone of {1,3} sits inside the quadrant of {1,2}
    RayAssignment ra{Word(1, {1, 1, 1}), {ints({1, 0}), ints({0, 1}), ints({1, 1})}, 2};
    auto idx = all_facets(ra.word);
    auto c = condition_one(ra, idx, Facet::from_positions({1, 2}));
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness);
    CHECK(*c.witness == Facet::from_positions({1, 3}));
}

TEST_CASE("fast ridge classification agrees with the kernel route") {
    for (const char* c : {"naive", "fixed:5,3", "linear", "pattern", "pattern-verbatim"})
        for (int n = 1; n <= 4; ++n) {
            auto ra = build_rays(parse_construction(c), n);
            auto idx = all_facets(ra.word);
            FanStats ref;
            for (const auto& e : idx.dual_edges()) {
                auto r = classify_ridge(ra, idx.facets()[e.first], idx.facets()[e.second]);
                ref.bad_ridges += r.status == RidgeStatus::Bad;
                ref.degenerate_ridges += r.status == RidgeStatus::Degenerate;
            }
            auto fast = fan_stats(ra, idx);
            CAPTURE(c);
            CAPTURE(n);
            CHECK(fast.bad_ridges == ref.bad_ridges);
            CHECK(fast.degenerate_ridges == ref.degenerate_ridges);
        }
}

TEST_CASE("statistics for n <= 4 match the reference tables") {
    const std::pair<const char*, const char*> tables[] = {{"naive", "T2"}, {"fixed:5,3", "T4"}, {"linear", "T6"}};
    for (auto [construction, id] : tables) {
        auto golden = load_golden_stats(id);
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(construction);
            CAPTURE(n);
            CHECK(stats_for(construction, n) == golden.columns[n - 1]);
        }
    }
}

TEST_CASE("certification") {
    auto run = [](const char* c, int n) {
        auto ra = build_rays(parse_construction(c), n);
        return certify_fan(ra, all_facets(ra.word));
    };
    auto p3 = run("pattern", 3);
    CHECK(p3.certified);
    CHECK_FALSE(p3.partial);
    CHECK(p3.stats.cones == 84);
    CHECK(p3.stats.ridges == 252);
    CHECK(p3.stats.min_dimension == 6);
    CHECK(p3.condition_one.checked == 83);

    auto n4 = run("naive", 4);
    CHECK_FALSE(n4.certified);
    CHECK(n4.stats.degenerate_ridges == 282);
    CHECK(n4.stats.degenerate_cones == 48);
    CHECK(n4.stats.min_dimension == 6);
    REQUIRE(n4.first_failure);
    CHECK(n4.first_failure->status == RidgeStatus::Degenerate);

    CHECK(run("fixed:5,3", 3).certified);

    auto v4 = run("pattern-verbatim", 4);
    CHECK_FALSE(v4.certified);
    CHECK(v4.stats.bad_ridges == 18);
    REQUIRE(v4.first_failure);
    CHECK(v4.first_failure->status == RidgeStatus::Bad);
}

TEST_CASE("statistics do not depend on the thread count") {
    for (const char* c : {"naive", "linear", "pattern"}) CHECK(stats_for(c, 4, 1) == stats_for(c, 4, 8));
    auto ra = build_rays(parse_construction("pattern"), 4);
    auto idx = all_facets(ra.word, 8);
    CertifyOptions one, eight;
    eight.threads = 8;
    auto a = certify_fan(ra, idx, one), b = certify_fan(ra, idx, eight);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("ratios and tables") {
    CHECK(format_ratio(11, 252) == "4.37");
    CHECK(format_ratio(0, 3) == "0.00");
    CHECK(format_ratio(1, 800) == "0.13");
    CHECK(format_ratio(1, 200) == "0.50");
    CHECK(format_ratio(20, 29695328) == "0.00");
    FanStats s{4, 0, 282, 2376, 48, 594, 6};
    auto table = format_stats_table({s});
    CHECK(table.find("# degenerate ridges") != std::string::npos);
    CHECK(table.find("11.87") != std::string::npos);
    CHECK(table.find("8.08") != std::string::npos);
    auto j = to_json(s);
    CHECK(j["degenerate_ridges"] == 282);
    CHECK(j["degenerate_cone_ratio"] == "8.08");
}
