#ifndef PLINK_SPHERES_HPP
#define PLINK_SPHERES_HPP

#include <string>
#include <vector>

#include "plink/simplex.hpp"

namespace plink {

enum class SphereKind { Tetrahedron, Octahedron, Cycle, Transported };

std::string to_string(SphereKind k);

// A subcomplex homeomorphic to an n-sphere, stored as its set of
// n-simplices (the lower faces are implied).  Members produced by pattern
// search or by transport are validated with is_z2_sphere.
class SphereSubcomplex {
public:
    SphereSubcomplex() = default;
    SphereSubcomplex(std::vector<Simplex> simplices, SphereKind kind);

    int dim() const { return simplices_.empty() ? -1 : simplices_.front().dim(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    SphereKind kind() const { return kind_; }

    std::vector<VertexId> vertex_set() const;
    bool disjoint_from(const SphereSubcomplex& other) const;
    bool uses(const Simplex& s) const;

    std::string to_string() const;

    // Kind is a provenance tag, not part of the identity.
    friend bool operator==(const SphereSubcomplex& a, const SphereSubcomplex& b) {
        return a.simplices_ == b.simplices_;
    }
    friend bool operator<(const SphereSubcomplex& a, const SphereSubcomplex& b) {
        return a.simplices_ < b.simplices_;
    }

private:
    std::vector<Simplex> simplices_;  // sorted, deduplicated
    SphereKind kind_ = SphereKind::Cycle;
};

// An unordered pair of vertexwise disjoint spheres (one element of Λⁿ).
// Canonical order: the lexicographically smaller component first.
class SpherePair {
public:
    SpherePair() = default;
    SpherePair(SphereSubcomplex a, SphereSubcomplex b);

    const SphereSubcomplex& first() const { return first_; }
    const SphereSubcomplex& second() const { return second_; }

    friend bool operator==(const SpherePair& a, const SpherePair& b) {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }
    friend bool operator<(const SpherePair& a, const SpherePair& b) {
        if (a.first_ == b.first_) return a.second_ < b.second_;
        return a.first_ < b.first_;
    }

private:
    SphereSubcomplex first_, second_;
};

// Combinatorial n-sphere check used to validate every enumerated or
// transported sphere: every (n-1)-face of the set occurs in exactly two
// of its n-simplices, and the facet-adjacency graph is connected.
bool is_z2_sphere(const std::vector<Simplex>& simplices);

}  // namespace plink

#endif  // PLINK_SPHERES_HPP
