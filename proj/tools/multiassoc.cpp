#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "manifest.hpp"
#include "multiassoc/fan.hpp"
#include "multiassoc/moves.hpp"
#include "multiassoc/multitriangulation.hpp"
#include "multiassoc/reproduce.hpp"

using namespace multiassoc;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// reported with exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    int threads = 0;
    std::string tier = "desk";
    std::optional<std::uint64_t> seed;
    std::string out;
    bool verbose = false;
    std::vector<std::string> argv;
};

// Writes to --out (with a manifest sidecar) or stdout.
class Output {
public:
    Output(const Globals& g, cli::RunManifest manifest) : path_(g.out), manifest_(std::move(manifest)) {
        manifest_.command_line = g.argv;
        manifest_.version = MULTIASSOC_VERSION;
        manifest_.started = cli::utc_timestamp();
        if (!path_.empty()) {
            file_.open(path_);
            if (!file_) throw UsageError("cannot write " + path_.string());
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    bool to_file() const { return !path_.empty(); }
    std::string reference() const { return cli::manifest_reference(path_); }
    void finish() {
        if (path_.empty()) return;
        file_.close();
        if (!file_) throw UsageError("error writing " + path_.string());
        cli::write_manifest(manifest_, {path_});
    }

private:
    fs::path path_;
    std::ofstream file_;
    cli::RunManifest manifest_;
};

std::pair<int, int> parse_kn(const std::string& text) {
    int k = 0, n = 0;
    char comma = 0;
    std::istringstream ss(text);
    if (!(ss >> k >> comma >> n) || comma != ',' || k < 1 || n < 1) throw UsageError("--kn expects k,n");
    return {k, n};
}

int cmd_facets(const Globals& g, const std::string& word_spec, const std::string& kn) {
    if (word_spec.empty() == kn.empty()) throw UsageError("facets needs exactly one of --word and --kn");
    Word w;
    int k = 0;
    if (!kn.empty()) {
        auto [kk, n] = parse_kn(kn);
        k = kk;
        w = multiassociahedron_word(k, n);
    } else {
        w = parse_word(word_spec);
    }
    if (!contains_longest(w)) throw UsageError("word does not contain a reduced expression of w0: " + format_word(w));
    auto idx = all_facets(w, g.threads);
    Output out(g, {.command = "facets", .n = w.rank(), .k = k});
    write_facet_file(out.stream(), idx);
    out.finish();
    std::cerr << idx.size() << " facets\n";
    return 0;
}

int cmd_rays(const Globals& g, const std::string& construction_text, int n) {
    Construction c;
    try {
        c = parse_construction(construction_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (n < 1) throw UsageError("--n must be positive");
    if (c.needs_seed() && !g.seed) throw UsageError("construction " + c.name() + " needs --seed");
    auto seed = c.needs_seed() ? g.seed : std::nullopt;
    auto ra = build_rays(c, n, seed);
    Output out(g, {.command = "rays", .construction = c.name(), .n = n, .k = c.k(), .seed = seed});
    std::vector<std::string> extra;
    if (out.to_file()) extra.push_back(out.reference());
    write_ray_file(out.stream(), ra, {n, ra.dimension, c.name(), seed}, extra);
    out.finish();
    return 0;
}

void print_failure(std::ostream& os, const CertifyResult& r) {
    if (r.first_failure) {
        const auto& f = *r.first_failure;
        os << "first failure: " << to_string(f.status) << " ridge {";
        auto pos = f.ridge.positions();
        for (std::size_t i = 0; i < pos.size(); ++i) os << (i ? "," : "") << pos[i];
        os << "} leaving " << f.leaving << " entering " << f.entering << '\n';
    }
    if (r.condition_one.witness) {
        os << "first intersecting facet: {";
        auto pos = r.condition_one.witness->positions();
        for (std::size_t i = 0; i < pos.size(); ++i) os << (i ? "," : "") << pos[i];
        os << "}\n";
    }
}

int cmd_check(const Globals& g, const std::string& ray_path, const std::string& word_spec, bool allow_partial,
              bool full_sweep, bool json) {
    std::ifstream in(ray_path);
    if (!in) throw UsageError("cannot read " + ray_path);
    RayFile rf;
    try {
        rf = read_ray_file(in);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Word& w = rf.rays.word;
    if (!word_spec.empty() && parse_word(word_spec) != w)
        throw UsageError("ray file word differs from --word " + word_spec);
    if (!contains_longest(w)) throw UsageError("ray file word does not contain w0");
    int facet_size = w.size() - longest_element(w.rank()).length();
    if (rf.header.dimension != facet_size)
        throw UsageError("dimension mismatch: rays in dimension " + std::to_string(rf.header.dimension) +
                         " but facets have " + std::to_string(facet_size) + " positions");

    auto idx = all_facets(w, g.threads);
    CertifyOptions opt;
    opt.threads = g.threads;
    opt.sweep = full_sweep ? SweepPolicy::Full : default_sweep(w.rank());
    auto r = certify_fan(rf.rays, idx, opt);
    r.stats.n = rf.header.n;

    Output out(g, {.command = "check",
                   .construction = rf.header.construction,
                   .n = rf.header.n,
                   .k = 0,
                   .seed = rf.header.seed});
    if (json) {
        auto j = to_json(r);
        j["provenance"] = {{"rays", ray_path},
                           {"construction", rf.header.construction},
                           {"n", rf.header.n},
                           {"seed", rf.header.seed ? nlohmann::json(*rf.header.seed) : nlohmann::json(nullptr)},
                           {"word", format_word(w)}};
        if (out.to_file()) j["manifest"] = cli::manifest_path(g.out).filename().string();
        out.stream() << j.dump(2) << '\n';
    } else {
        auto& os = out.stream();
        os << "# rays=" << ray_path << " construction=" << rf.header.construction << " n=" << rf.header.n
           << " seed=" << (rf.header.seed ? std::to_string(*rf.header.seed) : "none") << '\n';
        if (out.to_file()) os << "# " << out.reference() << '\n';
        os << format_stats_table({r.stats});
        os << "condition (1): ";
        if (r.condition_one.checked == 0 && !r.condition_one.witness)
            os << "not run\n";
        else
            os << (r.condition_one.holds ? "holds" : "fails") << " on " << r.condition_one.checked << " facets"
               << (r.condition_one.sampled ? " (sampled)" : "") << '\n';
        print_failure(os, r);
        os << (r.certified ? (r.partial ? "PARTIAL CERTIFICATE" : "CERTIFIED") : "NOT CERTIFIED") << '\n';
    }
    out.finish();
    bool ok = r.certified && (!r.partial || allow_partial);
    return ok ? 0 : kExitFailure;
}

int cmd_reproduce(const Globals& g, const std::string& id, const std::string& range_text) {
    std::optional<NRange> range;
    Tier tier;
    try {
        tier = parse_tier(g.tier);
        if (!range_text.empty()) range = parse_n_range(range_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ReproduceReport rep;
    try {
        rep = reproduce(id, range, tier, g.threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    Output out(g, {.command = "reproduce " + id});
    write_report(out.stream(), rep);
    out.finish();
    return rep.passed() ? 0 : kExitFailure;
}

int cmd_oracle(const Globals& g, int k, int n) {
    std::vector<Multitriangulation> triangulations;
    try {
        triangulations = enumerate_k_triangulations(k, n);
    } catch (const std::length_error& e) {
        throw UsageError(e.what());
    }
    std::set<Facet> from_oracle;
    for (const auto& t : triangulations) from_oracle.insert(to_facet(k, n, t));
    auto idx = all_facets(multiassociahedron_word(k, n), g.threads);
    std::set<Facet> from_complex(idx.facets().begin(), idx.facets().end());
    bool pass = from_oracle == from_complex && from_oracle.size() == triangulations.size();
    Output out(g, {.command = "oracle", .n = n, .k = k});
    auto& os = out.stream();
    os << "k=" << k << " n=" << n << " polygon=" << polygon_size(k, n) << '\n'
       << "k-triangulations: " << triangulations.size() << '\n'
       << "subword facets: " << from_complex.size() << '\n';
    if (g.verbose || !pass) {
        auto describe = [&](Facet f) {
            Multitriangulation t;
            for (int p : f.positions()) t.push_back(position_to_diagonal(k, n, p));
            return format_multitriangulation(t);
        };
        for (Facet f : from_oracle)
            if (!from_complex.count(f)) os << "only in oracle: " << describe(f) << '\n';
        for (Facet f : from_complex)
            if (!from_oracle.count(f)) os << "only in complex: " << describe(f) << '\n';
    }
    os << (pass ? "PASS" : "FAIL") << '\n';
    out.finish();
    return pass ? 0 : kExitFailure;
}

int cmd_trace(const Globals& g, int n, bool second) {
    if (n < 1) throw UsageError("--n must be positive");
    Word w = second ? coxeter_word(n).concat(c_sorted_word(n)) : c_sorted_word(n);
    auto trace = fattening_sequence(w, second ? n + 1 : 1);
    Output out(g, {.command = "trace", .n = n, .k = second ? 2 : 1});
    if (out.to_file()) out.stream() << "# " << out.reference() << '\n';
    write_trace(out.stream(), trace, g.verbose);
    out.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subword complex and fan realization toolkit for multiassociahedra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MULTIASSOC_VERSION);

    Globals g;
    g.argv.assign(argv, argv + argc);
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
    app.add_option("--tier", g.tier, "quick (n<=4), desk (n<=5) or full (n<=8)")
        ->check(CLI::IsMember({"quick", "desk", "full"}));
    app.add_option("--seed", g.seed, "Seed for randomized constructions");
    app.add_option("--out", g.out, "Output file (a .manifest.json sidecar is written next to it)");
    app.add_flag("-v,--verbose", g.verbose, "Verbose output");
    app.fallthrough();

    std::function<int()> run;

    auto* facets = app.add_subcommand("facets", "Enumerate the facets of a subword complex");
    std::string word_spec, kn;
    facets->add_option("--word", word_spec, "Word, e.g. \"c^2 w0(3)\" or \"n=2; 1 2 1\"");
    facets->add_option("--kn", kn, "Shorthand k,n for c^k w0(c) of rank n");
    facets->callback([&] { run = [&] { return cmd_facets(g, word_spec, kn); }; });

    auto* rays = app.add_subcommand("rays", "Construct rays for c^2 w0(c) (or c w0(c) for loday)");
    std::string construction;
    int n = 0;
    rays->add_option("--construction", construction,
                     "naive, fixed:L,R, linear, perturbed, pattern, pattern-verbatim or loday")
        ->required();
    rays->add_option("--n", n, "Rank")->required();
    rays->callback([&] { run = [&] { return cmd_rays(g, construction, n); }; });

    auto* check = app.add_subcommand("check", "Certify that a ray file realizes its complex as a complete fan");
    std::string ray_path;
    bool allow_partial = false, full_sweep = false, json = false;
    check->add_option("--rays", ray_path, "Ray file")->required();
    check->add_option("--word", word_spec, "Expected word");
    check->add_flag("--allow-partial", allow_partial, "Exit 0 on a sampled condition (1) certificate");
    check->add_flag("--full-sweep", full_sweep, "Run condition (1) on every facet regardless of n");
    check->add_flag("--json", json, "Print JSON instead of the table");
    check->callback([&] { run = [&] { return cmd_check(g, ray_path, word_spec, allow_partial, full_sweep, json); }; });

    auto* repro = app.add_subcommand("reproduce", "Regenerate a reference table and diff it cell by cell");
    std::string table_id, range_text;
    repro->add_option("id", table_id, "T1, T2, T3, T4, T5-integer, T6, F10 or F12")->required();
    repro->add_option("--n", range_text, "n or a..b");
    repro->callback([&] { run = [&] { return cmd_reproduce(g, table_id, range_text); }; });

    auto* oracle = app.add_subcommand("oracle", "Compare k-triangulations with subword facets");
    int k = 2;
    oracle->add_option("--k", k, "k")->required();
    oracle->add_option("--n", n, "n")->required();
    oracle->callback([&] { run = [&] { return cmd_oracle(g, k, n); }; });

    auto* trace = app.add_subcommand("trace", "Print the move trace fattening w0(c)");
    bool second = false;
    trace->add_option("--n", n, "Rank")->required();
    trace->add_flag("--second", second, "Fatten the triangle of c w0(c) instead");
    trace->callback([&] { run = [&] { return cmd_trace(g, n, second); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
