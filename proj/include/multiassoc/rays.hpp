#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiassoc/multitriangulation.hpp"
#include "multiassoc/rational.hpp"
#include "multiassoc/word.hpp"

namespace multiassoc {

struct RayVec {
    std::vector<Rational> coords;

    RayVec() = default;
    explicit RayVec(int dimension) : coords(dimension, Rational(0)) {}
    explicit RayVec(std::vector<Rational> c) : coords(std::move(c)) {}
    static RayVec from_ints(const std::vector<long>& v);

    int dimension() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    bool is_integral() const;
    RayVec padded(int dimension) const;

    bool operator==(const RayVec&) const = default;
};

RayVec operator+(const RayVec& a, const RayVec& b);
RayVec operator-(const RayVec& a, const RayVec& b);
RayVec operator*(const Rational& s, const RayVec& v);

struct RayAssignment {
    Word word;
    std::vector<RayVec> rays;  // rays[r-1] for position r
    int dimension = 0;

    const RayVec& at(int position) const { return rays.at(position - 1); }
    static RayAssignment zero(const Word& w, int dimension);
};

// c0 + ci * i + cj * j on label (i,j)
struct AffineCoefficient {
    Rational constant = 1;
    Rational per_i = 0;
    Rational per_j = 0;
    Rational at(int i, int j) const { return constant + per_i * i + per_j * j; }
};

// Coefficients of the braid transforms. The first fattening uses left/right on the
// braid label (i,j) (plus optional perturbation); the second uses a, b, c as the
// coefficients of the rays at r, r+1 (subtracted) and r+2.
struct CoefficientScheme {
    AffineCoefficient left;
    AffineCoefficient right;
    Rational a = 1, b = 1, c = 1;
    std::map<std::pair<int, int>, std::pair<Rational, Rational>> perturbation;

    Rational left_at(int i, int j) const;
    Rational right_at(int i, int j) const;

    static CoefficientScheme naive();
    static CoefficientScheme fixed(const Rational& left, const Rational& right);
    static CoefficientScheme linear(int n);
    // linear plus uniform noise in [-1/1000, 1/1000] with denominator 10^6
    static CoefficientScheme perturbed(int n, std::uint64_t seed);
};

RayAssignment double_transform(const RayAssignment& ra, int r, const Rational& alpha, const Rational& beta);
RayAssignment braid_transform(const RayAssignment& ra, int r, const Rational& a, const Rational& b,
                              const Rational& eps);
RayAssignment commute_transform(const RayAssignment& ra, int r);
// rays follow positions to the literal target word
RayAssignment reorder(const RayAssignment& ra, const Word& target);

// Replay the fattening of the triangle at `offset`. Braid coefficients are looked up
// from the label (i,j+1) of the middle letter as (i,j).
RayAssignment fatten_rays(const RayAssignment& ra, int offset, const CoefficientScheme& scheme, bool first);

enum class ConstructionKind { Naive, Fixed, Linear, Perturbed, Pattern, PatternVerbatim, Loday };

struct Construction {
    ConstructionKind kind = ConstructionKind::Naive;
    Rational left = 1, right = 1;  // fixed:L,R

    std::string name() const;
    bool needs_seed() const { return kind == ConstructionKind::Perturbed; }
    int k() const { return kind == ConstructionKind::Loday ? 1 : 2; }
};
Construction parse_construction(std::string_view text);

// two fattenings of w0(c) producing rays for c^2 w0(c) in dimension 2n
RayAssignment two_step_rays(int n, const CoefficientScheme& scheme);
RayAssignment loday_rays(int n);
// closed form on c w0(c): -e_i on the prefix, e_i - e_{i+j} (e_{n+1} = 0) on triangle letter (i,j)
RayAssignment loday_pattern(int n);

// Closed-form rays indexed by diagonals of the (n+5)-gon. The verbatim reading uses the
// coefficient 2n+4-i in the last family; the default uses 2n+2-i.
std::map<Diagonal, RayVec> pattern_by_diagonal(int n, bool verbatim = false);
// position of c^2 w0(c) carrying the pattern ray of diagonal d
int pattern_position(int n, Diagonal d);
RayAssignment pattern_rays(int n, bool verbatim = false);

RayAssignment build_rays(const Construction& c, int n, std::optional<std::uint64_t> seed = std::nullopt);

struct RayFileHeader {
    int n = 0;
    int dimension = 0;
    std::string construction;
    std::optional<std::uint64_t> seed;
};
void write_ray_file(std::ostream& out, const RayAssignment& ra, const RayFileHeader& header,
                    const std::vector<std::string>& extra_comments = {});
struct RayFile {
    RayFileHeader header;
    RayAssignment rays;
};
RayFile read_ray_file(std::istream& in);

}  // namespace multiassoc
