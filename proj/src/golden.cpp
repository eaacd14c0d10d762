#include "multiassoc/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace multiassoc {

std::filesystem::path golden_dir() {
    if (const char* env = std::getenv("MULTIASSOC_GOLDEN_DIR"); env && *env) return env;
    return MULTIASSOC_GOLDEN_DIR;
}

namespace {

std::ifstream open_golden(const std::string& id) {
    auto path = golden_dir() / (id + ".txt");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file " + path.string());
    return in;
}

}  // namespace

GoldenMatrix load_golden_matrix(const std::string& id) {
    auto in = open_golden(id);
    GoldenMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head == "boxed") {
            BoxedCell b;
            if (!(ss >> b.row >> b.column >> b.value)) throw std::runtime_error("bad boxed line in " + id);
            m.boxed.push_back(b);
            continue;
        }
        if (head.size() < 2 || head[0] != 's') throw std::runtime_error("bad row in " + id + ": " + line);
        m.letters.push_back(std::stoi(head.substr(1)));
        std::vector<long> row;
        long v;
        while (ss >> v) row.push_back(v);
        if (!m.rows.empty() && row.size() != m.rows.front().size())
            throw std::runtime_error("ragged matrix in " + id);
        m.rows.push_back(std::move(row));
    }
    return m;
}

GoldenStats load_golden_stats(const std::string& id) {
    auto in = open_golden(id);
    std::map<std::string, std::vector<std::string>> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key, cell;
        ss >> key;
        while (ss >> cell) table[key].push_back(cell);
    }
    auto row = [&](const std::string& key) -> const std::vector<std::string>& {
        auto it = table.find(key);
        if (it == table.end()) throw std::runtime_error("golden " + id + " lacks row " + key);
        return it->second;
    };
    GoldenStats g;
    const auto& ns = row("n");
    for (std::size_t c = 0; c < ns.size(); ++c) {
        FanStats s;
        s.n = std::stoi(ns[c]);
        s.bad_ridges = std::stoull(row("bad_ridges").at(c));
        s.degenerate_ridges = std::stoull(row("degenerate_ridges").at(c));
        s.ridges = std::stoull(row("ridges").at(c));
        s.degenerate_cones = std::stoull(row("degenerate_cones").at(c));
        s.cones = std::stoull(row("cones").at(c));
        s.min_dimension = std::stoi(row("minimal_dimension").at(c));
        g.columns.push_back(s);
        g.ridge_ratio.push_back(row("ridge_ratio").at(c));
        g.cone_ratio.push_back(row("cone_ratio").at(c));
    }
    return g;
}

}  // namespace multiassoc
