#include <doctest.h>

#include <set>
#include <stdexcept>

#include "multiassoc/multitriangulation.hpp"

using namespace multiassoc;

TEST_CASE("crossing") {
    CHECK(crossing({1, 3}, {2, 4}));
    CHECK_FALSE(crossing({1, 3}, {3, 5}));
    CHECK(crossing({2, 7}, {4, 9}));
    CHECK_FALSE(crossing({1, 9}, {3, 5}));
}

TEST_CASE("relevant diagonals") {
    CHECK(relevant_diagonals(2, 4).size() == 18);
    CHECK(relevant_diagonals(1, 2).size() == 5);
    CHECK(relevant_diagonals(2, 1) == std::vector<Diagonal>{{1, 4}, {2, 5}, {3, 6}});
}

TEST_CASE("oracle counts") {
    CHECK(enumerate_k_triangulations(1, 2).size() == 5);
    CHECK(enumerate_k_triangulations(1, 3).size() == 14);
    CHECK(enumerate_k_triangulations(2, 2).size() == 14);
    CHECK(enumerate_k_triangulations(2, 3).size() == 84);
    CHECK_THROWS_AS(enumerate_k_triangulations(3, 6), std::length_error);
}

TEST_CASE("diagonal positions") {
    CHECK(diagonal_to_position(2, 4, {1, 4}) == 1);
    CHECK(diagonal_to_position(2, 4, {3, 7}) == 10);
    for (int p = 1; p <= 18; ++p) CHECK(diagonal_to_position(2, 4, position_to_diagonal(2, 4, p)) == p);
    std::set<int> seen;
    for (auto d : relevant_diagonals(2, 4)) seen.insert(diagonal_to_position(2, 4, d));
    CHECK(seen.size() == 18);
}

TEST_CASE("k-triangulations are subword facets") {
    const std::pair<int, int> cases[] = {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
    for (auto [k, n] : cases) {
        CAPTURE(k);
        CAPTURE(n);
        auto ts = enumerate_k_triangulations(k, n);
        std::set<Facet> oracle;
        for (const auto& t : ts) oracle.insert(to_facet(k, n, t));
        auto idx = all_facets(multiassociahedron_word(k, n));
        std::set<Facet> complex(idx.facets().begin(), idx.facets().end());
        CHECK(oracle.size() == ts.size());
        CHECK(oracle == complex);
    }
}

TEST_CASE("shift diagonal") {
    CHECK(shift_diagonal(6, {1, 4}, 1) == Diagonal{2, 5});
    CHECK(shift_diagonal(6, {3, 6}, 1) == Diagonal{1, 4});
    CHECK(shift_diagonal(6, {1, 4}, -1) == Diagonal{3, 6});
    CHECK(format_multitriangulation({{1, 4}, {2, 5}}) == "1-4 2-5");
}
