#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multiassoc/word.hpp"

namespace multiassoc {

constexpr int kMaxPositions = 64;

// Set of 1-based positions, bit r-1 set for position r.
class Facet {
public:
    constexpr Facet() = default;
    constexpr explicit Facet(std::uint64_t bits) : bits_(bits) {}
    static Facet from_positions(const std::vector<int>& positions);

    std::uint64_t bits() const { return bits_; }
    bool contains(int r) const { return (bits_ >> (r - 1)) & 1u; }
    Facet with(int r) const { return Facet(bits_ | (std::uint64_t{1} << (r - 1))); }
    Facet without(int r) const { return Facet(bits_ & ~(std::uint64_t{1} << (r - 1))); }
    int size() const { return __builtin_popcountll(bits_); }
    std::vector<int> positions() const;

    auto operator<=>(const Facet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

// complement of the face contains a reduced expression of w0
bool is_face(const Word& w, Facet f);
// complement of f is a reduced expression of w0
bool is_facet(const Word& w, Facet f);

Facet greedy_facet(const Word& w);

struct Flip {
    int position;  // r'
    Facet facet;   // f'
};
// root-configuration flip
Flip flip(const Word& w, Facet f, int r);
// reference flip: try every candidate with a Demazure evaluation
Flip flip_naive(const Word& w, Facet f, int r);
// flips of every position of f, in increasing order of the removed position
std::vector<Flip> all_flips(const Word& w, Facet f);

std::vector<bool> vertex_status(const Word& w);

struct DualEdge {
    std::uint32_t first;
    std::uint32_t second;
    Facet ridge;
};

class ComplexIndex {
public:
    ComplexIndex(Word word, std::vector<Facet> facets, int threads = 1);

    const Word& word() const { return word_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t size() const { return facets_.size(); }
    int facet_size() const { return facet_size_; }
    const std::vector<bool>& vertex_flags() const { return vertex_flags_; }

    // id of the facet obtained by flipping the slot-th smallest position of facet id
    std::uint32_t neighbor(std::size_t id, int slot) const { return neighbors_[id * facet_size_ + slot]; }
    std::optional<std::size_t> find(Facet f) const;

    std::size_t ridge_count() const { return facets_.size() * facet_size_ / 2; }
    std::vector<DualEdge> dual_edges() const;

private:
    Word word_;
    std::vector<Facet> facets_;
    int facet_size_ = 0;
    std::vector<bool> vertex_flags_;
    std::vector<std::uint32_t> neighbors_;
};

// flip-graph traversal from the greedy facet; facets sorted by bitset value
ComplexIndex all_facets(const Word& w, int threads = 1);

void write_facet_file(std::ostream& out, const ComplexIndex& idx);
struct FacetFile {
    Word word;
    std::vector<Facet> facets;
};
FacetFile read_facet_file(std::istream& in);

}  // namespace multiassoc
