#ifndef PLINK_CANONICAL_HPP
#define PLINK_CANONICAL_HPP

#include <string>
#include <vector>

#include "plink/complex.hpp"

namespace plink {

// Relabeling-invariant signature of a complex.  Two complexes in the
// size range exercised here (<= 25 vertices) have equal forms iff they
// are isomorphic; correctness is cross-checked against brute-force
// bijection search on small instances in the test suite.
struct CanonicalForm {
    std::vector<VertexId> permutation;      // old vertex id -> canonical label
    std::vector<Simplex> maximal;           // relabeled, lexicographically sorted
    std::size_t vertex_count = 0;
    std::string digest;                     // lowercase hex

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.vertex_count == b.vertex_count && a.maximal == b.maximal;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
        return a.maximal < b.maximal;
    }
};

// Iterated degree-vector refinement followed by backtracking over
// refinement-respecting bijections; returns the lexicographically
// minimal relabeled encoding.
CanonicalForm canonicalize(const SimplicialComplex& k_complex);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace plink

#endif  // PLINK_CANONICAL_HPP
