#include "multiassoc/reproduce.hpp"

#include <algorithm>
#include <ostream>
#include <regex>
#include <stdexcept>

#include "multiassoc/fan.hpp"
#include "multiassoc/golden.hpp"

namespace multiassoc {

Tier parse_tier(std::string_view text) {
    if (text == "quick") return Tier::Quick;
    if (text == "desk") return Tier::Desk;
    if (text == "full") return Tier::Full;
    throw std::invalid_argument("unknown tier: " + std::string(text));
}

std::string to_string(Tier t) {
    switch (t) {
        case Tier::Quick: return "quick";
        case Tier::Desk: return "desk";
        case Tier::Full: return "full";
    }
    return "?";
}

int tier_max_n(Tier t) {
    switch (t) {
        case Tier::Quick: return 4;
        case Tier::Desk: return 5;
        case Tier::Full: return 8;
    }
    return 5;
}

NRange parse_n_range(std::string_view text) {
    static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, re)) throw std::invalid_argument("bad n range: " + std::string(text));
    NRange r;
    r.lo = std::stoi(m[1].str());
    r.hi = m[2].matched ? std::stoi(m[2].str()) : r.lo;
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad n range: " + std::string(text));
    return r;
}

bool ReproduceReport::passed() const { return failures() == 0 && !cells.empty(); }

std::size_t ReproduceReport::failures() const {
    return std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return !c.pass; });
}

const std::vector<std::string>& reproducible_ids() {
    static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "T5-integer", "T6", "F10", "F12"};
    return ids;
}

namespace {

void check(ReproduceReport& rep, std::string cell, const std::string& expected, const std::string& actual) {
    rep.cells.push_back({std::move(cell), expected, actual, expected == actual});
}

// "0" and "4.3" become "0.00" and "4.30"
std::string normalize_ratio(std::string s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return s + ".00";
    while (s.size() - dot < 3) s += '0';
    return s;
}

NRange fixed_n(const std::string& id, std::optional<NRange> range, int n) {
    if (range && (range->lo != n || range->hi != n))
        throw std::out_of_range(id + " is defined for n = " + std::to_string(n) + " only");
    return {n, n};
}

// boxed cells are expected to differ from the computed rays by their value
void compare_matrix(ReproduceReport& rep, const GoldenMatrix& g, const RayAssignment& ra, bool use_boxed) {
    if (static_cast<int>(g.rows.size()) != ra.word.size()) {
        check(rep, "rows", std::to_string(g.rows.size()), std::to_string(ra.word.size()));
        return;
    }
    for (int r = 1; r <= ra.word.size(); ++r) {
        std::string row = "row " + std::to_string(r);
        check(rep, row + " letter", "s" + std::to_string(g.letters[r - 1]), "s" + std::to_string(ra.word.at(r)));
        const auto& ray = ra.at(r);
        const auto& expected = g.rows[r - 1];
        if (static_cast<int>(expected.size()) != ray.dimension()) {
            check(rep, row + " dimension", std::to_string(expected.size()), std::to_string(ray.dimension()));
            continue;
        }
        for (int c = 1; c <= ray.dimension(); ++c) {
            Rational want(expected[c - 1]);
            if (use_boxed)
                for (const auto& b : g.boxed)
                    if (b.row == r && b.column == c) want -= b.value;
            check(rep, row + " col " + std::to_string(c), format_rational(want), format_rational(ray.coords[c - 1]));
        }
    }
}

void compare_stats(ReproduceReport& rep, const std::string& id, const Construction& construction, NRange range,
                   int threads) {
    auto golden = load_golden_stats(id);
    int max_n = static_cast<int>(golden.columns.size());
    if (range.hi > max_n) throw std::out_of_range(id + " covers n = 1.." + std::to_string(max_n));
    for (int n = range.lo; n <= range.hi; ++n) {
        const auto& g = golden.columns[n - 1];
        auto idx = all_facets(multiassociahedron_word(2, n), threads);
        auto s = fan_stats(build_rays(construction, n), idx, threads);
        std::string p = "n=" + std::to_string(n) + " ";
        auto num = [](auto v) { return std::to_string(v); };
        check(rep, p + "bad ridges", num(g.bad_ridges), num(s.bad_ridges));
        check(rep, p + "degenerate ridges", num(g.degenerate_ridges), num(s.degenerate_ridges));
        check(rep, p + "ridges", num(g.ridges), num(s.ridges));
        check(rep, p + "ridge ratio", normalize_ratio(golden.ridge_ratio[n - 1]),
              format_ratio(s.degenerate_ridges, s.ridges));
        check(rep, p + "degenerate cones", num(g.degenerate_cones), num(s.degenerate_cones));
        check(rep, p + "cones", num(g.cones), num(s.cones));
        check(rep, p + "cone ratio", normalize_ratio(golden.cone_ratio[n - 1]),
              format_ratio(s.degenerate_cones, s.cones));
        check(rep, p + "minimal dimension", num(g.min_dimension), num(s.min_dimension));
    }
}

}  // namespace

ReproduceReport reproduce(const std::string& id, std::optional<NRange> range, Tier tier, int threads) {
    ReproduceReport rep;
    rep.id = id;
    NRange stats_range = range.value_or(NRange{1, tier_max_n(tier)});
    if (id == "T1") {
        fixed_n(id, range, 4);
        compare_matrix(rep, load_golden_matrix(id), build_rays(parse_construction("naive"), 4), false);
    } else if (id == "T3") {
        fixed_n(id, range, 3);
        compare_matrix(rep, load_golden_matrix(id), build_rays(parse_construction("fixed:5,3"), 3), false);
    } else if (id == "T5-integer") {
        fixed_n(id, range, 5);
        auto g = load_golden_matrix(id);
        compare_matrix(rep, g, build_rays(parse_construction("linear"), 5), true);
        rep.notes.push_back("linear rays compared with the boxed perturbation terms removed (" +
                            std::to_string(g.boxed.size()) + " cells)");
    } else if (id == "F12") {
        fixed_n(id, range, 5);
        compare_matrix(rep, load_golden_matrix("T5-integer"), build_rays(parse_construction("pattern"), 5), false);
        rep.notes.push_back("pattern rays compared with the integer table including perturbation terms");
    } else if (id == "T2") {
        compare_stats(rep, id, parse_construction("naive"), stats_range, threads);
    } else if (id == "T4") {
        compare_stats(rep, id, parse_construction("fixed:5,3"), stats_range, threads);
    } else if (id == "T6") {
        compare_stats(rep, id, parse_construction("linear"), stats_range, threads);
    } else if (id == "F10") {
        NRange r = range.value_or(NRange{1, tier == Tier::Quick ? 4 : 6});
        if (r.hi > 12) throw std::out_of_range("F10 supports n <= 12");
        for (int n = r.lo; n <= r.hi; ++n) {
            auto got = loday_rays(n);
            auto want = loday_pattern(n);
            std::string p = "n=" + std::to_string(n) + " ";
            check(rep, p + "word", format_word(want.word), format_word(got.word));
            for (int pos = 1; pos <= want.word.size() && pos <= got.word.size(); ++pos) {
                auto fmt = [](const RayVec& v) {
                    std::string s;
                    for (const auto& q : v.coords) s += (s.empty() ? "" : " ") + format_rational(q);
                    return s;
                };
                check(rep, p + "row " + std::to_string(pos), fmt(want.at(pos)), fmt(got.at(pos)));
            }
        }
    } else {
        throw std::invalid_argument("unknown table id: " + id);
    }
    return rep;
}

void write_report(std::ostream& out, const ReproduceReport& report) {
    for (const auto& c : report.cells) {
        out << (c.pass ? "PASS " : "FAIL ") << report.id << ' ' << c.cell << ": expected " << c.expected;
        if (!c.pass) out << ", got " << c.actual;
        out << '\n';
    }
    for (const auto& n : report.notes) out << "# " << n << '\n';
    out << report.id << ": " << (report.cells.size() - report.failures()) << '/' << report.cells.size()
        << " cells match, " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace multiassoc
