#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace multiassoc {

// Permutation of [size] in one-line notation, 1-based images.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int size);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }
    int length() const;

    // right multiplication by the simple transposition s_i
    Permutation times_simple(int i) const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation longest_element(int n);

// Word over s_1..s_rank. Positions are 1-based.
class Word {
public:
    Word() = default;
    Word(int rank, std::vector<int> letters);

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int at(int position) const { return letters_.at(position - 1); }
    const std::vector<int>& letters() const { return letters_; }

    Word concat(const Word& other) const;
    // word with the given 1-based positions removed
    Word without(const std::vector<int>& positions) const;

    bool operator==(const Word&) const = default;

private:
    int rank_ = 1;
    std::vector<int> letters_;
};

// map[r-1] = new position of old position r
using PositionMap = std::vector<int>;

PositionMap identity_map(int size);
PositionMap compose(const PositionMap& first, const PositionMap& second);
PositionMap invert(const PositionMap& map);

Permutation product(const Word& w);
Permutation demazure_product(const Word& w);
bool contains_longest(const Word& w);
bool is_reduced(const Word& w);

Word coxeter_word(int n);        // c = s_1 ... s_n
Word coxeter_prefix(int from, int to);  // s_from ... s_to
Word c_sorted_word(int n);       // w0(c)
Word multiassociahedron_word(int k, int n);  // c^k w0(c)

struct Rotation {
    Word word;
    PositionMap correspondence;
};
Rotation rotate(const Word& w);
Rotation rotate(const Word& w, int times);
Word mirror(const Word& w);

// Positions are matched by occurrence: the t-th s_i of one word goes to the t-th s_i
// of the other. Valid exactly when the words are commutation equivalent.
bool commutation_equivalent(const Word& a, const Word& b);
PositionMap commutation_correspondence(const Word& from, const Word& to);

// "n=3; 1 2 3 1 2 1", "w0(3)", "c^2 w0(3)", "c w0(3)"
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace multiassoc
