#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "multiassoc/subword_complex.hpp"

using namespace multiassoc;

namespace {

// every subset of the right size passing the Demazure test
std::set<Facet> brute_force_facets(const Word& w) {
    int size = w.size() - longest_element(w.rank()).length();
    std::set<Facet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w.size()); ++bits) {
        Facet f(bits);
        if (f.size() == size && is_facet(w, f)) out.insert(f);
    }
    return out;
}

}  // namespace

TEST_CASE("greedy facet") {
    CHECK(greedy_facet(c_sorted_word(2)) == Facet());
    CHECK(greedy_facet(Word(1, {1, 1})) == Facet::from_positions({2}));
    Word q = multiassociahedron_word(2, 2);
    Facet g = greedy_facet(q);
    CHECK(g.size() == 4);
    CHECK(is_facet(q, g));
}

TEST_CASE("flip basics") {
    Word w(1, {1, 1});
    auto fl = flip(w, Facet::from_positions({1}), 1);
    CHECK(fl.position == 2);
    CHECK(fl.facet == Facet::from_positions({2}));
}

TEST_CASE("root flip equals reference flip") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k) {
            Word q = multiassociahedron_word(k, n);
            auto idx = all_facets(q);
            for (Facet f : idx.facets())
                for (int r : f.positions()) {
                    auto a = flip(q, f, r), b = flip_naive(q, f, r);
                    CHECK(a.position == b.position);
                    CHECK(a.facet == b.facet);
                    auto back = flip(q, a.facet, a.position);
                    CHECK(back.position == r);
                    CHECK(back.facet == f);
                }
        }
}

TEST_CASE("flip graph of c w0(c) for n=2 is a pentagon") {
    auto idx = all_facets(multiassociahedron_word(1, 2));
    REQUIRE(idx.size() == 5);
    CHECK(idx.dual_edges().size() == 5);
    for (std::size_t id = 0; id < idx.size(); ++id) {
        CHECK(idx.neighbor(id, 0) != idx.neighbor(id, 1));
        CHECK(idx.neighbor(id, 0) != id);
    }
}

TEST_CASE("facet and ridge counts") {
    const std::size_t cones[] = {3, 14, 84, 594, 4719};
    const std::size_t ridges[] = {3, 28, 252, 2376, 23595};
    for (int n = 1; n <= 5; ++n) {
        auto idx = all_facets(multiassociahedron_word(2, n), 2);
        CHECK(idx.size() == cones[n - 1]);
        CHECK(idx.ridge_count() == ridges[n - 1]);
    }
    CHECK(all_facets(multiassociahedron_word(1, 3)).size() == 14);
    CHECK(all_facets(c_sorted_word(3)).size() == 1);
}

TEST_CASE("traversal equals brute force") {
    for (auto w : {multiassociahedron_word(2, 2), multiassociahedron_word(1, 3), Word(2, {1, 2, 1, 1, 2, 2, 1})}) {
        auto idx = all_facets(w);
        std::set<Facet> got(idx.facets().begin(), idx.facets().end());
        CHECK(got == brute_force_facets(w));
    }
}

TEST_CASE("vertex status") {
    for (bool v : vertex_status(c_sorted_word(3))) CHECK_FALSE(v);
    CHECK(vertex_status(Word(1, {1, 1})) == std::vector<bool>{true, true});
    auto vs = vertex_status(multiassociahedron_word(2, 3));
    CHECK(vs.size() == 12);
    for (bool v : vs) CHECK(v);
}

TEST_CASE("index is independent of thread count") {
    Word q = multiassociahedron_word(2, 4);
    auto a = all_facets(q, 1), b = all_facets(q, 8);
    CHECK(a.facets() == b.facets());
    for (std::size_t id = 0; id < a.size(); ++id)
        for (int s = 0; s < a.facet_size(); ++s) CHECK(a.neighbor(id, s) == b.neighbor(id, s));
}

TEST_CASE("facet file round trip") {
    auto idx = all_facets(multiassociahedron_word(2, 2));
    std::stringstream ss;
    write_facet_file(ss, idx);
    auto ff = read_facet_file(ss);
    CHECK(ff.word == idx.word());
    CHECK(ff.facets == idx.facets());
}
