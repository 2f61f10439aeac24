#ifndef PLINK_LINKING_HPP
#define PLINK_LINKING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plink/complex.hpp"
#include "plink/crossings.hpp"
#include "plink/spheres.hpp"

namespace plink {

enum class EnumerationMode { Pattern, Cycles, Transported };

std::string to_string(EnumerationMode m);

// A family of unordered disjoint sphere pairs of one complex (Λⁿ or a
// transported image of it), deduplicated by canonical pair order.
struct PairFamily {
    SimplicialComplex complex;
    std::vector<SpherePair> pairs;  // sorted, deduplicated
    EnumerationMode mode = EnumerationMode::Pattern;
};

PairFamily make_family(SimplicialComplex complex, std::vector<SpherePair> pairs,
                       EnumerationMode mode);

// All disjoint pairs among the tetrahedra and octahedra of K
// (tetra-tetra, tetra-octa and octa-octa pairs).
PairFamily lambda_pattern(const SimplicialComplex& k_complex);

// n = 1 only: all unordered pairs of vertex-disjoint simple cycles, by
// exhaustive cycle enumeration.  Throws ComplexTooLarge past
// `max_cycles`.
PairFamily lambda_cycles(const SimplicialComplex& graph, std::size_t max_cycles = 1000000);

// Σ over the family of lk2(f(λ)), mod 2.  The embedding must be a
// generic (2n+1)-embedding of the family's complex.
int parity_sum(const PairFamily& family, const Embedding& e);

// Per-pair linking numbers, in family order.
std::vector<int> pairwise_lk2(const PairFamily& family, const Embedding& e);

// True (with a witness) iff some pair of the family has lk2 = 1.
std::pair<bool, std::optional<SpherePair>> exists_linked(const PairFamily& family,
                                                         const Embedding& e);

}  // namespace plink

#endif  // PLINK_LINKING_HPP
