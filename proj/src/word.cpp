#include "multiassoc/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace multiassoc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[v])
            throw std::invalid_argument("permutation images must form a bijection of [n+1]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int size) {
    std::vector<int> img(size);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

Permutation Permutation::times_simple(int i) const {
    Permutation out = *this;
    std::swap(out.images_[i - 1], out.images_[i]);
    return out;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("longest_element: n must be positive");
    std::vector<int> img(n + 1);
    for (int i = 0; i <= n; ++i) img[i] = n + 1 - i;
    return Permutation(std::move(img));
}

Word::Word(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
    if (rank_ < 1) throw std::invalid_argument("word rank must be positive");
    for (int l : letters_)
        if (l < 1 || l > rank_)
            throw std::invalid_argument("letter s_" + std::to_string(l) + " out of range for rank " +
                                        std::to_string(rank_));
}

Word Word::concat(const Word& other) const {
    if (other.rank_ != rank_) throw std::invalid_argument("concat: rank mismatch");
    std::vector<int> l = letters_;
    l.insert(l.end(), other.letters_.begin(), other.letters_.end());
    return Word(rank_, std::move(l));
}

Word Word::without(const std::vector<int>& positions) const {
    std::vector<bool> drop(letters_.size(), false);
    for (int p : positions) drop.at(p - 1) = true;
    std::vector<int> l;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (!drop[i]) l.push_back(letters_[i]);
    return Word(rank_, std::move(l));
}

PositionMap identity_map(int size) {
    PositionMap m(size);
    std::iota(m.begin(), m.end(), 1);
    return m;
}

PositionMap compose(const PositionMap& first, const PositionMap& second) {
    PositionMap out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second.at(first[i] - 1);
    return out;
}

PositionMap invert(const PositionMap& map) {
    PositionMap out(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.at(map[i] - 1) = static_cast<int>(i) + 1;
    return out;
}

Permutation product(const Word& w) {
    Permutation p = Permutation::identity(w.rank() + 1);
    for (int l : w.letters()) p = p.times_simple(l);
    return p;
}

Permutation demazure_product(const Word& w) {
    std::vector<int> img(w.rank() + 1);
    std::iota(img.begin(), img.end(), 1);
    for (int l : w.letters())
        if (img[l - 1] < img[l]) std::swap(img[l - 1], img[l]);
    return Permutation(std::move(img));
}

bool contains_longest(const Word& w) { return demazure_product(w) == longest_element(w.rank()); }

bool is_reduced(const Word& w) {
    std::vector<int> img(w.rank() + 1);
    std::iota(img.begin(), img.end(), 1);
    for (int l : w.letters()) {
        if (img[l - 1] > img[l]) return false;
        std::swap(img[l - 1], img[l]);
    }
    return true;
}

Word coxeter_prefix(int from, int to) {
    std::vector<int> l;
    for (int i = from; i <= to; ++i) l.push_back(i);
    return Word(std::max(to, 1), std::move(l));
}

Word coxeter_word(int n) { return Word(n, coxeter_prefix(1, n).letters()); }

Word c_sorted_word(int n) {
    if (n < 1) throw std::invalid_argument("c_sorted_word: n must be positive");
    std::vector<int> l;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) l.push_back(j);
    return Word(n, std::move(l));
}

Word multiassociahedron_word(int k, int n) {
    if (k < 0) throw std::invalid_argument("multiassociahedron_word: k must be nonnegative");
    Word w(n, {});
    for (int t = 0; t < k; ++t) w = w.concat(coxeter_word(n));
    return w.concat(c_sorted_word(n));
}

Rotation rotate(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rotate: empty word");
    std::vector<int> l;
    l.reserve(w.size());
    l.push_back(w.rank() + 1 - w.letters().back());
    l.insert(l.end(), w.letters().begin(), w.letters().end() - 1);
    PositionMap m(w.size());
    for (int r = 1; r < w.size(); ++r) m[r - 1] = r + 1;
    m.back() = 1;
    return {Word(w.rank(), std::move(l)), std::move(m)};
}

Rotation rotate(const Word& w, int times) {
    Rotation acc{w, identity_map(w.size())};
    for (int t = 0; t < times; ++t) {
        Rotation step = rotate(acc.word);
        acc.word = std::move(step.word);
        acc.correspondence = compose(acc.correspondence, step.correspondence);
    }
    return acc;
}

Word mirror(const Word& w) {
    std::vector<int> l(w.letters().rbegin(), w.letters().rend());
    return Word(w.rank(), std::move(l));
}

bool commutation_equivalent(const Word& a, const Word& b) {
    if (a.rank() != b.rank() || a.size() != b.size()) return false;
    // two words are commutation equivalent iff all projections to pairs of
    // non-commuting letters agree
    for (int x = 1; x <= a.rank(); ++x) {
        for (int y = x; y <= std::min(x + 1, a.rank()); ++y) {
            std::vector<int> pa, pb;
            for (int l : a.letters())
                if (l == x || l == y) pa.push_back(l);
            for (int l : b.letters())
                if (l == x || l == y) pb.push_back(l);
            if (pa != pb) return false;
        }
    }
    return true;
}

PositionMap commutation_correspondence(const Word& from, const Word& to) {
    if (!commutation_equivalent(from, to))
        throw std::invalid_argument("commutation_correspondence: words are not commutation equivalent");
    std::map<int, std::vector<int>> occ;
    for (int r = 1; r <= to.size(); ++r) occ[to.at(r)].push_back(r);
    std::map<int, std::size_t> used;
    PositionMap m(from.size());
    for (int r = 1; r <= from.size(); ++r) m[r - 1] = occ[from.at(r)][used[from.at(r)]++];
    return m;
}

Word parse_word(std::string_view text) {
    static const std::regex explicit_re(R"(^\s*n\s*=\s*(\d+)\s*;([\s\d]*)$)");
    static const std::regex named_re(R"(^\s*(?:c(?:\^(\d+))?\s+)?w0\s*\(\s*(\d+)\s*\)\s*$)");
    std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, explicit_re)) {
        int rank = std::stoi(m[1]);
        std::istringstream in(m[2].str());
        std::vector<int> letters;
        for (int l; in >> l;) letters.push_back(l);
        return Word(rank, std::move(letters));
    }
    if (std::regex_match(s, m, named_re)) {
        int n = std::stoi(m[2]);
        int k = 0;
        if (s.find('c') != std::string::npos) k = m[1].matched ? std::stoi(m[1]) : 1;
        return multiassociahedron_word(k, n);
    }
    throw std::invalid_argument("cannot parse word '" + s + "'");
}

std::string format_word(const Word& w) {
    std::string out = "n=" + std::to_string(w.rank()) + ";";
    for (int l : w.letters()) out += " " + std::to_string(l);
    return out;
}

}  // namespace multiassoc
