#pragma once

#include <map>
#include <vector>

namespace multiassoc {

// Pure simplicial complex stored by its inclusion-maximal faces, each a sorted
// vector of integer vertex ids; the facet list itself is kept sorted.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<std::vector<int>> faces);

    const std::vector<std::vector<int>>& facets() const { return facets_; }
    std::vector<int> vertices() const;

    SimplicialComplex deletion(int x) const;
    SimplicialComplex link(const std::vector<int>& face) const;
    SimplicialComplex relabel(const std::map<int, int>& map) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::vector<int>> facets_;
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex suspension(const SimplicialComplex& c, int u1, int u2);
// (del(x) * {x0, x1}) U (lk(x) * x0x1)
SimplicialComplex one_point_suspension(const SimplicialComplex& c, int x, int x0, int x1);
// faces containing `face` are replaced by z joined with their boundary pieces
SimplicialComplex stellar_subdivision(const SimplicialComplex& c, const std::vector<int>& face, int z);

}  // namespace multiassoc
