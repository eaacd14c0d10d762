#include "multiassoc/fan.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "multiassoc/lp.hpp"
#include "multiassoc/parallel.hpp"

namespace multiassoc {

std::string to_string(RidgeStatus s) {
    switch (s) {
        case RidgeStatus::Good: return "good";
        case RidgeStatus::Bad: return "bad";
        case RidgeStatus::Degenerate: return "degenerate";
    }
    return "?";
}

namespace {

std::vector<RayVec> rays_of(const RayAssignment& ra, Facet f) {
    std::vector<RayVec> out;
    for (int p : f.positions()) out.push_back(ra.at(p));
    return out;
}

struct IntegerRays {
    explicit IntegerRays(const RayAssignment& ra) : dimension(ra.dimension) {
        for (const auto& v : ra.rays) columns.push_back(primitive_integer(v));
    }
    EliminationResult facet(Facet f) const {
        std::vector<const IntColumn*> cols;
        for (int p : f.positions()) cols.push_back(&columns[p - 1]);
        return eliminate(cols, dimension);
    }
    int dimension;
    std::vector<IntColumn> columns;
};

void check_compatible(const RayAssignment& ra, const ComplexIndex& idx) {
    if (!(ra.word == idx.word())) throw std::invalid_argument("ray assignment and complex use different words");
    if (idx.facet_size() != ra.dimension)
        throw std::invalid_argument("ray dimension " + std::to_string(ra.dimension) + " differs from facet size " +
                                    std::to_string(idx.facet_size()));
}

int slot_of(Facet f, int position) {
    return __builtin_popcountll(f.bits() & ((std::uint64_t{1} << (position - 1)) - 1));
}

}  // namespace

int facet_rank(const RayAssignment& ra, Facet f) { return rank(rays_of(ra, f)); }

RidgeReport classify_ridge(const RayAssignment& ra, Facet f, Facet g) {
    Facet diff(f.bits() ^ g.bits());
    if (f.size() != g.size() || diff.size() != 2) throw std::invalid_argument("classify_ridge: facets not adjacent");
    RidgeReport rep;
    rep.ridge = Facet(f.bits() & g.bits());
    rep.leaving = Facet(f.bits() & ~g.bits()).positions().front();
    rep.entering = Facet(g.bits() & ~f.bits()).positions().front();
    Facet both(f.bits() | g.bits());
    auto basis = kernel(rays_of(ra, both));
    if (facet_rank(ra, f) < ra.dimension || facet_rank(ra, g) < ra.dimension || basis.size() != 1) {
        rep.status = RidgeStatus::Degenerate;
        return rep;
    }
    auto pos = both.positions();
    int li = static_cast<int>(std::find(pos.begin(), pos.end(), rep.leaving) - pos.begin());
    int ei = static_cast<int>(std::find(pos.begin(), pos.end(), rep.entering) - pos.begin());
    rep.dependence = basis.front().coords;
    if (rep.dependence[li] < 0)
        for (auto& x : rep.dependence) x = -x;
    rep.status = rep.dependence[li] != 0 && rep.dependence[ei] > 0 ? RidgeStatus::Good : RidgeStatus::Bad;
    return rep;
}

SweepPolicy default_sweep(int n) { return n <= 5 ? SweepPolicy::Full : SweepPolicy::Sampled; }

ConditionOneResult condition_one(const RayAssignment& ra, const ComplexIndex& idx, Facet base, SweepPolicy policy,
                                 std::size_t sample, int threads) {
    ConditionOneResult res;
    if (policy == SweepPolicy::Skip) {
        res.sampled = true;
        return res;
    }
    const int d = ra.dimension;
    auto binv = inverse(rays_of(ra, base));  // throws on a rank-deficient base
    // coordinates of every ray in the base basis
    std::vector<std::vector<Rational>> coords(ra.word.size(), std::vector<Rational>(d));
    for (int p = 1; p <= ra.word.size(); ++p)
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (ra.at(p).coords[k] != 0) coords[p - 1][i] += binv[i][k] * ra.at(p).coords[k];

    std::vector<std::size_t> ids;
    std::size_t stride = 1;
    if (policy == SweepPolicy::Sampled && idx.size() > sample) {
        stride = (idx.size() + sample - 1) / sample;
        res.sampled = true;
    }
    for (std::size_t id = 0; id < idx.size(); id += stride)
        if (idx.facets()[id] != base) ids.push_back(id);
    res.checked = ids.size();

    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> hits;
    std::mutex mu;
    parallel_chunks(ids.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            Facet f = idx.facets()[ids[t]];
            auto pos = f.positions();
            std::vector<std::vector<Rational>> a(d, std::vector<Rational>(pos.size()));
            for (std::size_t j = 0; j < pos.size(); ++j)
                for (int i = 0; i < d; ++i) a[i][j] = coords[pos[j] - 1][i];
            if (positive_feasible(a)) {
                std::lock_guard<std::mutex> lock(mu);
                hits.push_back(t);
                return;
            }
        }
    });
    std::size_t first = none;
    for (auto t : hits) first = std::min(first, t);
    if (first != none) {
        res.holds = false;
        res.witness = idx.facets()[ids[first]];
    }
    return res;
}

FanStats fan_stats(const RayAssignment& ra, const ComplexIndex& idx, int threads,
                   std::optional<RidgeReport>* first_failure) {
    check_compatible(ra, idx);
    const int d = ra.dimension;
    const std::size_t N = idx.size();
    IntegerRays ir(ra);
    std::vector<int> ranks(N);
    std::vector<signed char> signs(N);
    parallel_chunks(N, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t id = begin; id < end; ++id) {
            auto e = ir.facet(idx.facets()[id]);
            ranks[id] = e.rank;
            signs[id] = static_cast<signed char>(e.det_sign);
        }
    });

    struct Partial {
        std::uint64_t bad = 0, degenerate = 0, ridges = 0;
        std::optional<std::pair<std::size_t, int>> failure;
    };
    int workers = resolve_threads(threads);
    std::vector<Partial> parts;
    std::mutex mu;
    parallel_chunks(N, workers, [&](std::size_t begin, std::size_t end) {
        Partial p;
        for (std::size_t id = begin; id < end; ++id) {
            Facet f = idx.facets()[id];
            auto pos = f.positions();
            for (int s = 0; s < idx.facet_size(); ++s) {
                std::size_t other = idx.neighbor(id, s);
                if (other < id) continue;
                ++p.ridges;
                bool failed = false;
                if (ranks[id] < d || ranks[other] < d) {
                    ++p.degenerate;
                    failed = true;
                } else {
                    Facet g = idx.facets()[other];
                    int entering = Facet(g.bits() & ~f.bits()).positions().front();
                    int sf = ((d - 1 - s) % 2) ? -signs[id] : signs[id];
                    int sg_slot = slot_of(g, entering);
                    int sg = ((d - 1 - sg_slot) % 2) ? -signs[other] : signs[other];
                    if (sf * sg >= 0) {
                        ++p.bad;
                        failed = true;
                    }
                }
                if (failed && !p.failure) p.failure = std::make_pair(id, s);
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        parts.push_back(p);
    });

    FanStats st;
    st.cones = N;
    st.min_dimension = N ? *std::min_element(ranks.begin(), ranks.end()) : 0;
    for (int r : ranks) st.degenerate_cones += r < d;
    std::optional<std::pair<std::size_t, int>> fail;
    for (const auto& p : parts) {
        st.bad_ridges += p.bad;
        st.degenerate_ridges += p.degenerate;
        st.ridges += p.ridges;
        if (p.failure && (!fail || *p.failure < *fail)) fail = p.failure;
    }
    if (first_failure) {
        first_failure->reset();
        if (fail) {
            Facet f = idx.facets()[fail->first];
            Facet g = idx.facets()[idx.neighbor(fail->first, fail->second)];
            *first_failure = classify_ridge(ra, f, g);
        }
    }
    return st;
}

CertifyResult certify_fan(const RayAssignment& ra, const ComplexIndex& idx, const CertifyOptions& opt) {
    CertifyResult res;
    res.stats = fan_stats(ra, idx, opt.threads, &res.first_failure);
    res.stats.n = ra.word.rank();
    bool ridges_ok = res.stats.bad_ridges == 0 && res.stats.degenerate_ridges == 0 && res.stats.degenerate_cones == 0;
    if (!ridges_ok) {
        res.condition_one.sampled = true;
        return res;
    }
    res.base = greedy_facet(ra.word);
    res.condition_one = condition_one(ra, idx, *res.base, opt.sweep, opt.sample, opt.threads);
    res.partial = res.condition_one.sampled;
    res.certified = res.condition_one.holds;
    return res;
}

std::string format_ratio(std::uint64_t count, std::uint64_t total) {
    if (total == 0) return "0.00";
    unsigned __int128 hundredths = (static_cast<unsigned __int128>(count) * 20000 + total) / (2 * total);
    auto whole = static_cast<unsigned long long>(hundredths / 100);
    auto frac = static_cast<unsigned>(hundredths % 100);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%llu.%02u", whole, frac);
    return buf;
}

std::string format_stats_table(const std::vector<FanStats>& columns) {
    std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
        {"n", {}},          {"# bad ridges", {}}, {"# degenerate ridges", {}}, {"# ridges", {}},
        {"ratio (%)", {}},  {"# degenerate cones", {}}, {"# cones", {}},   {"ratio (%)", {}},
        {"minimal dimension", {}}};
    for (const auto& s : columns) {
        std::string vals[] = {std::to_string(s.n),
                              std::to_string(s.bad_ridges),
                              std::to_string(s.degenerate_ridges),
                              std::to_string(s.ridges),
                              format_ratio(s.degenerate_ridges, s.ridges),
                              std::to_string(s.degenerate_cones),
                              std::to_string(s.cones),
                              format_ratio(s.degenerate_cones, s.cones),
                              std::to_string(s.min_dimension)};
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r].second.push_back(vals[r]);
    }
    std::size_t label_w = 0, col_w = 0;
    for (const auto& [label, vals] : rows) {
        label_w = std::max(label_w, label.size());
        for (const auto& v : vals) col_w = std::max(col_w, v.size());
    }
    std::ostringstream out;
    for (const auto& [label, vals] : rows) {
        out << label << std::string(label_w - label.size(), ' ');
        for (const auto& v : vals) out << "  " << std::string(col_w - v.size(), ' ') << v;
        out << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const FanStats& s) {
    return {{"n", s.n},
            {"bad_ridges", s.bad_ridges},
            {"degenerate_ridges", s.degenerate_ridges},
            {"ridges", s.ridges},
            {"degenerate_ridge_ratio", format_ratio(s.degenerate_ridges, s.ridges)},
            {"degenerate_cones", s.degenerate_cones},
            {"cones", s.cones},
            {"degenerate_cone_ratio", format_ratio(s.degenerate_cones, s.cones)},
            {"minimal_dimension", s.min_dimension}};
}

nlohmann::json to_json(const CertifyResult& r) {
    nlohmann::json j = {{"certified", r.certified}, {"partial", r.partial}, {"stats", to_json(r.stats)}};
    nlohmann::json c1 = {{"holds", r.condition_one.holds},
                         {"checked_facets", r.condition_one.checked},
                         {"sampled", r.condition_one.sampled}};
    if (r.base) c1["base"] = r.base->positions();
    if (r.condition_one.witness) c1["witness"] = r.condition_one.witness->positions();
    j["condition_one"] = c1;
    if (r.first_failure) {
        nlohmann::json f = {{"ridge", r.first_failure->ridge.positions()},
                            {"leaving", r.first_failure->leaving},
                            {"entering", r.first_failure->entering},
                            {"status", to_string(r.first_failure->status)}};
        std::vector<std::string> dep;
        for (const auto& x : r.first_failure->dependence) dep.push_back(format_rational(x));
        f["dependence"] = dep;
        j["first_failure"] = f;
    }
    return j;
}

}  // namespace multiassoc
