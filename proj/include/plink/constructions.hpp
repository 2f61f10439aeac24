#ifndef PLINK_CONSTRUCTIONS_HPP
#define PLINK_CONSTRUCTIONS_HPP

#include <vector>

#include "plink/complex.hpp"
#include "plink/spheres.hpp"

namespace plink {

// Vertex bookkeeping for K^(n) and its relatives: n+1 disjoint factor
// triples plus one apex.  Fixed id convention: apex = 0, factor i point j
// = 1 + 3i + j, so fixtures and goldens stay stable.
struct FactorIndexing {
    int n = 0;
    VertexId apex = 0;
    VertexId factor_point(int factor, int j) const { return 1 + 3 * factor + j; }
    std::size_t vertex_count() const { return 3u * (static_cast<std::size_t>(n) + 1) + 1; }
};

// n-skeleton of an m-simplex (complete n-skeleton on m+1 vertices).
SimplicialComplex sigma_skeleton(int m, int n);

// [k]^{*folds}: the folds-fold join of k points, a (folds-1)-complex
// with k^folds maximal simplices.
SimplicialComplex fold_join(int k, int folds);

// K^(n): all Type I simplices (one point from each factor) plus all
// Type II simplices (apex + one point from each of n factors).
std::pair<SimplicialComplex, FactorIndexing> build_K(int n);

// H^(n): the subcomplex of K^(n) generated by the Type I simplices,
// isomorphic to [3]^{*(n+1)}.  The apex is not a vertex of H^(n).
SimplicialComplex build_H(int n);

// Ξ(H^(n)): Type I simplices with factor indices summing to 0 mod 3;
// 3^n members, pairwise sharing no (n-1)-face.  Expressed in K^(n)
// vertex ids.
std::vector<Simplex> xi_set(int n);

// Γ¹_Ξ: the n-tetrahedra ∂|apex * ξ| over ξ in Ξ(H^(n)); pairwise
// sharing no n-simplex.
std::vector<SphereSubcomplex> gamma_xi_tetrahedra(int n);

// Kneser graph on k-subsets of [m]; kneser_graph(5, 2) is the Petersen
// graph, used as a construction-independent model.
SimplicialComplex kneser_graph(int m, int k);

}  // namespace plink

#endif  // PLINK_CONSTRUCTIONS_HPP
