#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multiassoc/fan.hpp"
#include "multiassoc/moves.hpp"
#include "multiassoc/multitriangulation.hpp"
#include "multiassoc/reproduce.hpp"

namespace py = pybind11;
using namespace multiassoc;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list ray_rows(const RayAssignment& ra) {
    py::list rows;
    for (const auto& v : ra.rays) {
        py::list row;
        for (const auto& x : v.coords) row.append(to_fraction(x));
        rows.append(row);
    }
    return rows;
}

py::dict stats_dict(const FanStats& s) {
    py::dict d;
    d["n"] = s.n;
    d["bad_ridges"] = s.bad_ridges;
    d["degenerate_ridges"] = s.degenerate_ridges;
    d["ridges"] = s.ridges;
    d["degenerate_cones"] = s.degenerate_cones;
    d["cones"] = s.cones;
    d["minimal_dimension"] = s.min_dimension;
    return d;
}

RayAssignment rays_for(const std::string& construction, int n, std::optional<std::uint64_t> seed) {
    return build_rays(parse_construction(construction), n, seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Subword complexes, multitriangulations and fan realizations of multiassociahedra";
    m.attr("__version__") = MULTIASSOC_VERSION;

    m.def("multiassociahedron_word", [](int k, int n) { return multiassociahedron_word(k, n).letters(); },
          py::arg("k"), py::arg("n"));
    m.def("parse_word", [](const std::string& s) {
        auto w = parse_word(s);
        return std::make_pair(w.rank(), w.letters());
    }, py::arg("spec"));
    m.def("demazure_product", [](int rank, std::vector<int> letters) {
        return demazure_product(Word(rank, std::move(letters))).images();
    }, py::arg("rank"), py::arg("letters"));
    m.def("contains_longest", [](int rank, std::vector<int> letters) {
        return contains_longest(Word(rank, std::move(letters)));
    }, py::arg("rank"), py::arg("letters"));

    m.def("facets", [](int rank, std::vector<int> letters, int threads) {
        auto idx = all_facets(Word(rank, std::move(letters)), threads);
        std::vector<std::vector<int>> out;
        out.reserve(idx.size());
        for (Facet f : idx.facets()) out.push_back(f.positions());
        return out;
    }, py::arg("rank"), py::arg("letters"), py::arg("threads") = 1,
       "Facets of the subword complex as sorted lists of 1-based positions");

    m.def("k_triangulations", [](int k, int n) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& t : enumerate_k_triangulations(k, n)) {
            std::vector<std::pair<int, int>> ds;
            for (auto d : t) ds.emplace_back(d.a, d.b);
            out.push_back(std::move(ds));
        }
        return out;
    }, py::arg("k"), py::arg("n"));
    m.def("diagonal_to_position", [](int k, int n, int a, int b) { return diagonal_to_position(k, n, {a, b}); },
          py::arg("k"), py::arg("n"), py::arg("a"), py::arg("b"));

    m.def("rays", [](const std::string& construction, int n, std::optional<std::uint64_t> seed) {
        auto ra = rays_for(construction, n, seed);
        return py::make_tuple(ra.word.letters(), ray_rows(ra));
    }, py::arg("construction"), py::arg("n"), py::arg("seed") = py::none(),
       "(letters, rays) with rays as lists of fractions.Fraction");

    m.def("fan_stats", [](const std::string& construction, int n, std::optional<std::uint64_t> seed, int threads) {
        auto ra = rays_for(construction, n, seed);
        FanStats s;
        {
            py::gil_scoped_release release;
            s = fan_stats(ra, all_facets(ra.word, threads), threads);
        }
        s.n = n;
        return stats_dict(s);
    }, py::arg("construction"), py::arg("n"), py::arg("seed") = py::none(), py::arg("threads") = 1);

    m.def("certify", [](const std::string& construction, int n, std::optional<std::uint64_t> seed, int threads) {
        auto ra = rays_for(construction, n, seed);
        CertifyResult r;
        {
            py::gil_scoped_release release;
            auto idx = all_facets(ra.word, threads);
            CertifyOptions opt;
            opt.threads = threads;
            opt.sweep = default_sweep(n);
            r = certify_fan(ra, idx, opt);
            r.stats.n = n;
        }
        py::dict d;
        d["certified"] = r.certified;
        d["partial"] = r.partial;
        d["stats"] = stats_dict(r.stats);
        d["condition_one_checked"] = r.condition_one.checked;
        return d;
    }, py::arg("construction"), py::arg("n"), py::arg("seed") = py::none(), py::arg("threads") = 1);

    m.def("fattening_trace", [](int n) {
        auto trace = fattening_sequence(c_sorted_word(n), 1);
        std::vector<std::pair<std::string, int>> events;
        for (auto e : trace.events()) events.emplace_back(std::string(1, move_code(e.kind)), e.position);
        return py::make_tuple(events, trace.final_word().letters());
    }, py::arg("n"), "Move events (code, position) and final word of the fattening of w0(c)");

    m.def("reproduce", [](const std::string& id, std::optional<std::pair<int, int>> n_range, const std::string& tier) {
        std::optional<NRange> range;
        if (n_range) range = NRange{n_range->first, n_range->second};
        auto rep = reproduce(id, range, parse_tier(tier));
        py::dict d;
        d["id"] = rep.id;
        d["passed"] = rep.passed();
        d["cells"] = rep.cells.size();
        d["failures"] = rep.failures();
        return d;
    }, py::arg("id"), py::arg("n_range") = py::none(), py::arg("tier") = "quick");
}
