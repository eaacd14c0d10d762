#include "multiassoc/rays.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "multiassoc/moves.hpp"
#include "multiassoc/subword_complex.hpp"

namespace multiassoc {

RayVec RayVec::from_ints(const std::vector<long>& v) {
    RayVec out;
    for (long x : v) out.coords.emplace_back(x);
    return out;
}

bool RayVec::is_zero() const {
    for (const auto& x : coords)
        if (x != 0) return false;
    return true;
}

bool RayVec::is_integral() const {
    for (const auto& x : coords)
        if (x.get_den() != 1) return false;
    return true;
}

RayVec RayVec::padded(int dimension) const {
    RayVec out = *this;
    out.coords.resize(dimension, Rational(0));
    return out;
}

RayVec operator+(const RayVec& a, const RayVec& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("ray dimension mismatch");
    RayVec out = a;
    for (int t = 0; t < a.dimension(); ++t) out.coords[t] += b.coords[t];
    return out;
}

RayVec operator-(const RayVec& a, const RayVec& b) { return a + Rational(-1) * b; }

RayVec operator*(const Rational& s, const RayVec& v) {
    RayVec out = v;
    for (auto& x : out.coords) x *= s;
    return out;
}

RayAssignment RayAssignment::zero(const Word& w, int dimension) {
    return {w, std::vector<RayVec>(w.size(), RayVec(dimension)), dimension};
}

Rational CoefficientScheme::left_at(int i, int j) const {
    Rational v = left.at(i, j);
    if (auto it = perturbation.find({i, j}); it != perturbation.end()) v += it->second.first;
    if (v <= 0) throw std::domain_error("coefficient scheme: nonpositive left coefficient");
    return v;
}

Rational CoefficientScheme::right_at(int i, int j) const {
    Rational v = right.at(i, j);
    if (auto it = perturbation.find({i, j}); it != perturbation.end()) v += it->second.second;
    if (v <= 0) throw std::domain_error("coefficient scheme: nonpositive right coefficient");
    return v;
}

CoefficientScheme CoefficientScheme::naive() { return {}; }

CoefficientScheme CoefficientScheme::fixed(const Rational& left, const Rational& right) {
    CoefficientScheme s;
    s.left.constant = left;
    s.right.constant = right;
    return s;
}

CoefficientScheme CoefficientScheme::linear(int n) {
    CoefficientScheme s;
    s.left = {Rational(2 * n + 4), Rational(-1), Rational(-1)};
    s.right = {Rational(2 * n + 3), Rational(-1), Rational(-1)};
    return s;
}

CoefficientScheme CoefficientScheme::perturbed(int n, std::uint64_t seed) {
    CoefficientScheme s = linear(n);
    std::mt19937_64 rng(seed);
    auto draw = [&] {
        Rational q(static_cast<long>(rng() % 2001) - 1000, 1000000);
        q.canonicalize();
        return q;
    };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n - i; ++j) {
            Rational l = draw();
            Rational r = draw();
            s.perturbation[{i, j}] = {l, r};
        }
    return s;
}

RayAssignment double_transform(const RayAssignment& ra, int r, const Rational& alpha, const Rational& beta) {
    if (alpha * beta >= 0) throw std::invalid_argument("double_transform: need alpha * beta < 0");
    MoveResult mv = apply_move(ra.word, {MoveKind::Double, r});
    RayAssignment out{mv.word, std::vector<RayVec>(mv.word.size()), ra.dimension + 1};
    for (int p = 1; p <= ra.word.size(); ++p) out.rays[mv.correspondence[p - 1] - 1] = ra.at(p).padded(out.dimension);
    out.rays[r - 1].coords.back() = alpha;
    out.rays[r] = ra.at(r).padded(out.dimension);
    out.rays[r].coords.back() = beta;
    return out;
}

RayAssignment braid_transform(const RayAssignment& ra, int r, const Rational& a, const Rational& b,
                              const Rational& eps) {
    if (a <= 0 || b <= 0 || eps <= 0) throw std::invalid_argument("braid_transform: coefficients must be positive");
    MoveResult mv = apply_move(ra.word, {MoveKind::Braid, r});
    RayAssignment out{mv.word, ra.rays, ra.dimension};
    out.rays[r - 1] = ra.at(r + 2);
    out.rays[r + 1] = ra.at(r);
    out.rays[r] = a * ra.at(r) + b * ra.at(r + 2) - eps * ra.at(r + 1);
    // keep the zero-ray rule: a middle letter that is no vertex carries 0
    if (!out.rays[r].is_zero() && !contains_longest(out.word.without({r + 1}))) out.rays[r] = RayVec(out.dimension);
    return out;
}

RayAssignment commute_transform(const RayAssignment& ra, int r) {
    MoveResult mv = apply_move(ra.word, {MoveKind::Commutation, r});
    RayAssignment out{mv.word, ra.rays, ra.dimension};
    std::swap(out.rays[r - 1], out.rays[r]);
    return out;
}

RayAssignment reorder(const RayAssignment& ra, const Word& target) {
    PositionMap m = commutation_correspondence(ra.word, target);
    RayAssignment out{target, std::vector<RayVec>(target.size()), ra.dimension};
    for (int p = 1; p <= ra.word.size(); ++p) out.rays[m[p - 1] - 1] = ra.at(p);
    return out;
}

RayAssignment fatten_rays(const RayAssignment& ra, int offset, const CoefficientScheme& scheme, bool first) {
    MoveTrace trace = fattening_sequence(ra.word, offset);
    RayAssignment cur = ra;
    const LabelRow* labels = &trace.initial_labels;
    for (const MoveStep& s : trace.steps) {
        int r = s.event.position;
        switch (s.event.kind) {
            case MoveKind::Double: cur = double_transform(cur, r, Rational(-1), Rational(1)); break;
            case MoveKind::Commutation: cur = commute_transform(cur, r); break;
            case MoveKind::Braid: {
                const Label& mid = *(*labels)[r];
                int i = mid.i, j = mid.j - 1;
                if (first)
                    cur = braid_transform(cur, r, scheme.left_at(i, j), scheme.right_at(i, j), Rational(1));
                else
                    cur = braid_transform(cur, r, scheme.a, scheme.c, scheme.b);
                break;
            }
        }
        labels = &s.labels;
    }
    return cur;
}

std::string Construction::name() const {
    switch (kind) {
        case ConstructionKind::Naive: return "naive";
        case ConstructionKind::Fixed: return "fixed:" + format_rational(left) + "," + format_rational(right);
        case ConstructionKind::Linear: return "linear";
        case ConstructionKind::Perturbed: return "perturbed";
        case ConstructionKind::Pattern: return "pattern";
        case ConstructionKind::PatternVerbatim: return "pattern-verbatim";
        case ConstructionKind::Loday: return "loday";
    }
    return "?";
}

Construction parse_construction(std::string_view text) {
    std::string s(text);
    static const std::map<std::string, ConstructionKind> simple = {
        {"naive", ConstructionKind::Naive},         {"linear", ConstructionKind::Linear},
        {"perturbed", ConstructionKind::Perturbed}, {"pattern", ConstructionKind::Pattern},
        {"pattern-verbatim", ConstructionKind::PatternVerbatim}, {"loday", ConstructionKind::Loday}};
    if (auto it = simple.find(s); it != simple.end()) return {it->second};
    static const std::regex fixed_re(R"(^fixed(?::|\()\s*([-0-9/]+)\s*,\s*([-0-9/]+)\s*\)?$)");
    std::smatch m;
    if (std::regex_match(s, m, fixed_re)) {
        Construction c{ConstructionKind::Fixed, parse_rational(m[1].str()), parse_rational(m[2].str())};
        if (c.left <= 0 || c.right <= 0) throw std::domain_error("fixed coefficients must be positive");
        return c;
    }
    throw std::invalid_argument("unknown construction '" + s + "'");
}

RayAssignment two_step_rays(int n, const CoefficientScheme& scheme) {
    RayAssignment ra = RayAssignment::zero(c_sorted_word(n), 0);
    ra = fatten_rays(ra, 1, scheme, true);
    ra = reorder(ra, multiassociahedron_word(1, n));
    ra = fatten_rays(ra, n + 1, scheme, false);
    return reorder(ra, multiassociahedron_word(2, n));
}

RayAssignment loday_rays(int n) {
    RayAssignment ra = RayAssignment::zero(c_sorted_word(n), 0);
    ra = fatten_rays(ra, 1, CoefficientScheme::naive(), true);
    return reorder(ra, multiassociahedron_word(1, n));
}

RayAssignment loday_pattern(int n) {
    RayAssignment ra = RayAssignment::zero(multiassociahedron_word(1, n), n);
    for (int i = 1; i <= n; ++i) ra.rays[i - 1].coords[i - 1] = -1;
    int r = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            RayVec& v = ra.rays[r++];
            v.coords[i - 1] += 1;
            if (i + j <= n) v.coords[i + j - 1] -= 1;
        }
    return ra;
}

std::map<Diagonal, RayVec> pattern_by_diagonal(int n, bool verbatim) {
    const int d = 2 * n;
    auto e = [&](int i) {
        RayVec v(d);
        v.coords.at(i - 1) = 1;
        return v;
    };
    auto f = [&](int i) {
        RayVec v(d);
        v.coords.at(n + i - 1) = 1;
        return v;
    };
    auto q = [](long x) { return Rational(x); };
    std::map<Diagonal, RayVec> R;
    R[{1, 4}] = e(n) - f(n);
    for (int j = 1; j < n; ++j) {
        RayVec step = q(2 * n + 2 - j) * (e(j) - e(j + 1));
        R[{1, j + 4}] = step + e(n) + f(j) - f(n);
        R[{2, j + 4}] = e(j) + step + f(j);
        R[{4, j + 6}] = e(j) + step - f(j);
    }
    R[{2, n + 4}] = e(n) + f(n);
    for (int j = 1; j <= n; ++j) R[{3, j + 5}] = q(-1) * e(j);
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= n - i - 1; ++j) {
            long coef = verbatim ? 2 * n + 4 - i : 2 * n + 2 - i;
            R[{i + 4, i + j + 6}] = q(j) * e(i) - q(j - 1) * (e(i + j) + e(i + j + 1)) +
                                    q(coef) * (e(i + j) - e(i + 1)) + f(i) - f(i + j);
        }
    return R;
}

int pattern_position(int n, Diagonal d) {
    return diagonal_to_position(2, n, shift_diagonal(polygon_size(2, n), d, -2));
}

RayAssignment pattern_rays(int n, bool verbatim) {
    RayAssignment ra = RayAssignment::zero(multiassociahedron_word(2, n), 2 * n);
    auto R = pattern_by_diagonal(n, verbatim);
    if (static_cast<int>(R.size()) != ra.word.size()) throw std::logic_error("pattern: wrong number of diagonals");
    for (const auto& [diag, v] : R) ra.rays.at(pattern_position(n, diag) - 1) = v;
    return ra;
}

RayAssignment build_rays(const Construction& c, int n, std::optional<std::uint64_t> seed) {
    if (n < 1) throw std::invalid_argument("build_rays: n must be positive");
    switch (c.kind) {
        case ConstructionKind::Naive: return two_step_rays(n, CoefficientScheme::naive());
        case ConstructionKind::Fixed: return two_step_rays(n, CoefficientScheme::fixed(c.left, c.right));
        case ConstructionKind::Linear: return two_step_rays(n, CoefficientScheme::linear(n));
        case ConstructionKind::Perturbed:
            if (!seed) throw std::invalid_argument("perturbed construction needs a seed");
            return two_step_rays(n, CoefficientScheme::perturbed(n, *seed));
        case ConstructionKind::Pattern: return pattern_rays(n, false);
        case ConstructionKind::PatternVerbatim: return pattern_rays(n, true);
        case ConstructionKind::Loday: return loday_rays(n);
    }
    throw std::invalid_argument("unknown construction");
}

void write_ray_file(std::ostream& out, const RayAssignment& ra, const RayFileHeader& header,
                    const std::vector<std::string>& extra_comments) {
    out << "# n=" << header.n << " d=" << ra.dimension << " construction=" << header.construction
        << " seed=" << (header.seed ? std::to_string(*header.seed) : "none") << "\n";
    for (const auto& c : extra_comments) out << "# " << c << "\n";
    for (int p = 1; p <= ra.word.size(); ++p) {
        out << p << " s" << ra.word.at(p);
        for (const auto& x : ra.at(p).coords) out << " " << format_rational(x);
        out << "\n";
    }
}

RayFile read_ray_file(std::istream& in) {
    static const std::regex header_re(R"(^# n=(\d+) d=(\d+) construction=(\S+) seed=(\S+)\s*$)");
    std::string line;
    std::smatch m;
    if (!std::getline(in, line) || !std::regex_match(line, m, header_re))
        throw std::invalid_argument("ray file: malformed header");
    RayFile rf;
    rf.header.n = std::stoi(m[1]);
    rf.header.dimension = std::stoi(m[2]);
    rf.header.construction = m[3];
    if (m[4] != "none") rf.header.seed = std::stoull(m[4]);
    std::vector<int> letters;
    std::vector<RayVec> rays;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int pos = 0;
        std::string letter;
        if (!(ls >> pos >> letter) || letter.size() < 2 || letter[0] != 's' ||
            pos != static_cast<int>(letters.size()) + 1)
            throw std::invalid_argument("ray file: bad line '" + line + "'");
        letters.push_back(std::stoi(letter.substr(1)));
        RayVec v;
        for (std::string tok; ls >> tok;) v.coords.push_back(parse_rational(tok));
        if (v.dimension() != rf.header.dimension)
            throw std::invalid_argument("ray file: dimension mismatch at position " + std::to_string(pos));
        rays.push_back(std::move(v));
    }
    rf.rays = {Word(rf.header.n, std::move(letters)), std::move(rays), rf.header.dimension};
    return rf;
}

}  // namespace multiassoc
