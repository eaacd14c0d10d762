#include "multiassoc/subword_complex.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "multiassoc/parallel.hpp"

namespace multiassoc {

namespace {

void check_length(const Word& w) {
    if (w.size() > kMaxPositions)
        throw std::invalid_argument("subword complexes are limited to " + std::to_string(kMaxPositions) +
                                    " positions");
}

Word complement(const Word& w, Facet f) {
    std::vector<int> l;
    for (int r = 1; r <= w.size(); ++r)
        if (!f.contains(r)) l.push_back(w.at(r));
    return Word(w.rank(), std::move(l));
}

}  // namespace

Facet Facet::from_positions(const std::vector<int>& positions) {
    std::uint64_t bits = 0;
    for (int r : positions) {
        if (r < 1 || r > kMaxPositions) throw std::invalid_argument("facet position out of range");
        bits |= std::uint64_t{1} << (r - 1);
    }
    return Facet(bits);
}

std::vector<int> Facet::positions() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
    return out;
}

bool is_face(const Word& w, Facet f) { return contains_longest(complement(w, f)); }

bool is_facet(const Word& w, Facet f) {
    Word c = complement(w, f);
    return is_reduced(c) && product(c) == longest_element(w.rank());
}

Facet greedy_facet(const Word& w) {
    check_length(w);
    if (!contains_longest(w)) throw std::invalid_argument("word does not contain a reduced expression of w0");
    std::vector<int> img(w.rank() + 1);
    std::iota(img.begin(), img.end(), 1);
    std::uint64_t bits = 0;
    for (int r = 1; r <= w.size(); ++r) {
        int l = w.at(r);
        if (img[l - 1] < img[l])
            std::swap(img[l - 1], img[l]);
        else
            bits |= std::uint64_t{1} << (r - 1);
    }
    return Facet(bits);
}

std::vector<Flip> all_flips(const Word& w, Facet f) {
    const int m = w.rank() + 1;
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    // root (a,b) of each facet position, and the complement position owning each positive root
    std::vector<int> owner(m * m, 0);
    std::vector<std::pair<int, int>> facet_roots;
    std::vector<int> facet_positions;
    for (int r = 1; r <= w.size(); ++r) {
        int l = w.at(r);
        int a = img[l - 1], b = img[l];
        if (f.contains(r)) {
            facet_roots.emplace_back(std::min(a, b), std::max(a, b));
            facet_positions.push_back(r);
        } else {
            owner[(a - 1) * m + (b - 1)] = r;
            std::swap(img[l - 1], img[l]);
        }
    }
    std::vector<Flip> out;
    out.reserve(facet_positions.size());
    for (std::size_t t = 0; t < facet_positions.size(); ++t) {
        auto [a, b] = facet_roots[t];
        int j = owner[(a - 1) * m + (b - 1)];
        if (j == 0) throw std::logic_error("flip: root without partner (not a facet?)");
        out.push_back({j, f.without(facet_positions[t]).with(j)});
    }
    return out;
}

Flip flip(const Word& w, Facet f, int r) {
    if (!f.contains(r)) throw std::invalid_argument("flip: position not in facet");
    auto flips = all_flips(w, f);
    auto pos = f.positions();
    auto it = std::find(pos.begin(), pos.end(), r);
    return flips[it - pos.begin()];
}

Flip flip_naive(const Word& w, Facet f, int r) {
    if (!f.contains(r)) throw std::invalid_argument("flip: position not in facet");
    Facet ridge = f.without(r);
    for (int c = 1; c <= w.size(); ++c) {
        if (c == r || ridge.contains(c)) continue;
        Facet g = ridge.with(c);
        if (is_facet(w, g)) return {c, g};
    }
    throw std::logic_error("flip_naive: no partner facet");
}

std::vector<bool> vertex_status(const Word& w) {
    std::vector<bool> out(w.size());
    for (int r = 1; r <= w.size(); ++r) out[r - 1] = contains_longest(w.without({r}));
    return out;
}

ComplexIndex::ComplexIndex(Word word, std::vector<Facet> facets, int threads)
    : word_(std::move(word)), facets_(std::move(facets)) {
    check_length(word_);
    std::sort(facets_.begin(), facets_.end());
    if (facets_.empty()) throw std::invalid_argument("complex index needs at least one facet");
    facet_size_ = facets_.front().size();
    vertex_flags_.assign(word_.size(), false);
    std::uint64_t all = 0;
    for (Facet f : facets_) all |= f.bits();
    for (int r = 1; r <= word_.size(); ++r) vertex_flags_[r - 1] = (all >> (r - 1)) & 1u;

    neighbors_.assign(facets_.size() * facet_size_, 0);
    parallel_chunks(facets_.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t id = begin; id < end; ++id) {
            auto flips = all_flips(word_, facets_[id]);
            for (int s = 0; s < facet_size_; ++s) {
                auto other = find(flips[s].facet);
                if (!other) throw std::logic_error("flip leaves the facet set");
                neighbors_[id * facet_size_ + s] = static_cast<std::uint32_t>(*other);
            }
        }
    });
}

std::optional<std::size_t> ComplexIndex::find(Facet f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
}

std::vector<DualEdge> ComplexIndex::dual_edges() const {
    std::vector<DualEdge> out;
    out.reserve(ridge_count());
    for (std::size_t id = 0; id < facets_.size(); ++id) {
        auto pos = facets_[id].positions();
        for (int s = 0; s < facet_size_; ++s) {
            std::uint32_t other = neighbor(id, s);
            if (id < other)
                out.push_back({static_cast<std::uint32_t>(id), other, facets_[id].without(pos[s])});
        }
    }
    return out;
}

ComplexIndex all_facets(const Word& w, int threads) {
    Facet start = greedy_facet(w);
    std::unordered_set<std::uint64_t> seen{start.bits()};
    std::vector<Facet> facets{start};
    for (std::size_t head = 0; head < facets.size(); ++head) {
        for (const Flip& fl : all_flips(w, facets[head]))
            if (seen.insert(fl.facet.bits()).second) facets.push_back(fl.facet);
    }
    return ComplexIndex(w, std::move(facets), threads);
}

void write_facet_file(std::ostream& out, const ComplexIndex& idx) {
    out << "# word: " << format_word(idx.word()) << "; facets: " << idx.size() << "\n";
    for (Facet f : idx.facets()) {
        auto pos = f.positions();
        for (std::size_t i = 0; i < pos.size(); ++i) out << (i ? " " : "") << pos[i];
        out << "\n";
    }
}

FacetFile read_facet_file(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# word: ", 0) != 0)
        throw std::invalid_argument("facet file: missing '# word:' header");
    auto cut = header.rfind("; facets:");
    if (cut == std::string::npos) throw std::invalid_argument("facet file: missing facet count");
    FacetFile ff{parse_word(header.substr(8, cut - 8)), {}};
    std::size_t count = std::stoull(header.substr(cut + 9));
    std::string line;
    while (ff.facets.size() < count && std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> pos;
        for (int r; ls >> r;) pos.push_back(r);
        ff.facets.push_back(Facet::from_positions(pos));
    }
    if (ff.facets.size() != count) throw std::invalid_argument("facet file: truncated");
    return ff;
}

}  // namespace multiassoc
