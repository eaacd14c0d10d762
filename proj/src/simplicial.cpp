#include "multiassoc/simplicial.hpp"

#include <algorithm>
#include <set>

namespace multiassoc {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() > y.size() : x < y;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
        bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const auto& g) { return subset(f, g); });
        if (!covered) facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> v;
    for (const auto& f : facets_) v.insert(f.begin(), f.end());
    return {v.begin(), v.end()};
}

SimplicialComplex SimplicialComplex::deletion(int x) const {
    std::vector<std::vector<int>> faces;
    for (auto f : facets_) {
        f.erase(std::remove(f.begin(), f.end(), x), f.end());
        faces.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::link(const std::vector<int>& face) const {
    std::vector<int> s = face;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets_) {
        if (!subset(s, f)) continue;
        std::vector<int> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        faces.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::relabel(const std::map<int, int>& map) const {
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets_) {
        std::vector<int> g;
        for (int v : f) {
            auto it = map.find(v);
            g.push_back(it == map.end() ? v : it->second);
        }
        faces.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> faces;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            std::vector<int> h = f;
            h.insert(h.end(), g.begin(), g.end());
            faces.push_back(std::move(h));
        }
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex& c, int u1, int u2) {
    return join(c, SimplicialComplex({{u1}, {u2}}));
}

SimplicialComplex one_point_suspension(const SimplicialComplex& c, int x, int x0, int x1) {
    SimplicialComplex a = join(c.deletion(x), SimplicialComplex({{x0}, {x1}}));
    SimplicialComplex b = join(c.link({x}), SimplicialComplex({{x0, x1}}));
    auto faces = a.facets();
    faces.insert(faces.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& c, const std::vector<int>& face, int z) {
    std::vector<int> s = face;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> faces;
    for (const auto& f : c.facets()) {
        if (!subset(s, f)) {
            faces.push_back(f);
            continue;
        }
        for (int v : s) {
            std::vector<int> g;
            for (int u : f)
                if (u != v) g.push_back(u);
            g.push_back(z);
            faces.push_back(std::move(g));
        }
    }
    return SimplicialComplex(std::move(faces));
}

}  // namespace multiassoc
