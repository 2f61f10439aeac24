#ifndef PLINK_COMPLEX_HPP
#define PLINK_COMPLEX_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "plink/simplex.hpp"
#include "plink/spheres.hpp"

namespace plink {

// An abstract simplicial complex given by its maximal simplices over a
// label table.  Instances are immutable after construction; the face
// closure is materialized per dimension on demand and memoized behind a
// lock, so shared read-only use from several threads is safe.  Copies
// share both the data and the cache.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Face closure of the given maximal list.  Labels must be unique;
    // simplices index into the label table.  Dominated entries are
    // pruned; vertices not covered by any simplex become isolated
    // 0-simplices.
    static SimplicialComplex closure(std::vector<std::string> labels,
                                     std::vector<Simplex> maximal, std::string name = "");

    const std::string& name() const { return data_->name; }
    int dim() const { return data_->n; }
    std::size_t vertex_count() const { return data_->labels.size(); }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(VertexId v) const { return data_->labels.at(static_cast<std::size_t>(v)); }

    // Throws Error when the label is unknown.
    VertexId vertex_by_label(const std::string& label) const;

    const std::vector<Simplex>& maximal_simplices() const { return data_->maximal; }

    // Δ^k(K): all k-simplices of the face closure, lexicographically
    // sorted.  Throws DimensionOutOfRange unless 0 <= k <= dim.
    const std::vector<Simplex>& simplices(int k) const;

    bool has_simplex(const Simplex& s) const;

    // deg_K^n(s): number of n-simplices containing s (n = dim).
    // Throws SimplexNotInComplex when s is not in the closure.
    int degree(const Simplex& s) const;

    // Total number of simplices in the face closure, all dimensions.
    std::size_t closure_size() const;

    SimplicialComplex renamed(std::string name) const;

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
        std::vector<Simplex> maximal;  // sorted, domination-pruned
        int n = -1;
    };
    struct Cache {
        std::mutex mu;
        std::map<int, std::vector<Simplex>> by_dim;
        std::map<int, std::unordered_set<Simplex, SimplexHash>> sets;
    };

    std::shared_ptr<const Data> data_;
    std::shared_ptr<Cache> cache_;

    const std::unordered_set<Simplex, SimplexHash>& simplex_set(int k) const;
};

// Convenience alias matching the Δ^k notation.
inline const std::vector<Simplex>& delta_k(const SimplicialComplex& k_complex, int k) {
    return k_complex.simplices(k);
}

// The k-skeleton: all k-faces of K become the maximal simplices;
// maximal simplices of dimension < k are kept as they are.
SimplicialComplex skeleton(const SimplicialComplex& k_complex, int k);

// Join K * L.  Vertex ids of L are offset past K's; labels are suffixed
// with a factor index to keep the table consistent.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

// ∂σ_m: the boundary of an m-simplex (m >= 1).
SimplicialComplex boundary_sphere(int m);

// All n-tetrahedra: vertex subsets S, |S| = n+2, with every (n+1)-subset
// of S spanning an n-simplex of K.
std::vector<SphereSubcomplex> find_tetrahedra(const SimplicialComplex& k_complex);

// All n-octahedra: n+1 disjoint vertex pairs whose 2^{n+1} cross
// n-simplices are all present in K.
std::vector<SphereSubcomplex> find_octahedra(const SimplicialComplex& k_complex);

// True iff every (n-1)-simplex has degree exactly 3.
bool is_trivalent(const SimplicialComplex& k_complex);

}  // namespace plink

#endif  // PLINK_COMPLEX_HPP
