#include "plink/spheres.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace plink {

std::string to_string(SphereKind k) {
    switch (k) {
        case SphereKind::Tetrahedron: return "tetrahedron";
        case SphereKind::Octahedron: return "octahedron";
        case SphereKind::Cycle: return "cycle";
        case SphereKind::Transported: return "transported";
    }
    return "?";
}

SphereSubcomplex::SphereSubcomplex(std::vector<Simplex> simplices, SphereKind kind)
    : simplices_(std::move(simplices)), kind_(kind) {
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
    if (simplices_.empty()) throw Error("empty sphere subcomplex");
    for (const Simplex& s : simplices_)
        if (s.dim() != simplices_.front().dim())
            throw Error("sphere subcomplex mixes simplex dimensions");
}

std::vector<VertexId> SphereSubcomplex::vertex_set() const {
    std::set<VertexId> vs;
    for (const Simplex& s : simplices_) vs.insert(s.vertices().begin(), s.vertices().end());
    return {vs.begin(), vs.end()};
}

bool SphereSubcomplex::disjoint_from(const SphereSubcomplex& other) const {
    std::vector<VertexId> a = vertex_set();
    std::vector<VertexId> b = other.vertex_set();
    std::vector<VertexId> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return inter.empty();
}

bool SphereSubcomplex::uses(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

std::string SphereSubcomplex::to_string() const {
    std::ostringstream os;
    os << plink::to_string(kind_) << "{";
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        if (i) os << ",";
        os << simplices_[i].to_string();
    }
    os << "}";
    return os.str();
}

SpherePair::SpherePair(SphereSubcomplex a, SphereSubcomplex b) {
    if (!a.disjoint_from(b)) throw Error("sphere pair components are not disjoint");
    if (b < a) std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
}

bool is_z2_sphere(const std::vector<Simplex>& simplices) {
    if (simplices.empty()) return false;
    const int n = simplices.front().dim();
    for (const Simplex& s : simplices)
        if (s.dim() != n) return false;
    if (n == 0) {
        // S^0 is exactly two points.
        std::set<Simplex> distinct(simplices.begin(), simplices.end());
        return distinct.size() == 2 && simplices.size() == 2;
    }

    // Every (n-1)-face in exactly two members.
    std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> face_users;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (const Simplex& f : simplices[i].facets()) face_users[f].push_back(i);
    for (const auto& [face, users] : face_users)
        if (users.size() != 2) return false;

    // Facet-adjacency connectivity.
    std::vector<std::vector<std::size_t>> adj(simplices.size());
    for (const auto& [face, users] : face_users) {
        adj[users[0]].push_back(users[1]);
        adj[users[1]].push_back(users[0]);
    }
    std::vector<bool> seen(simplices.size(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t nb : adj[cur]) {
            if (!seen[nb]) {
                seen[nb] = true;
                ++reached;
                stack.push_back(nb);
            }
        }
    }
    return reached == simplices.size();
}

}  // namespace plink
