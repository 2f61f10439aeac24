#ifndef PLINK_DELTAY_HPP
#define PLINK_DELTAY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plink/canonical.hpp"
#include "plink/complex.hpp"
#include "plink/linking.hpp"
#include "plink/spheres.hpp"

namespace plink {

// One ΔY(n)-exchange: the n+2 removed simplices of Δⁿ, the fresh apex
// vertex x and the C(n+2,2) added simplices of Yⁿ.
struct ExchangeRecord {
    std::string source_name;
    std::vector<Simplex> removed;  // facets of the underlying (n+1)-simplex
    VertexId added_vertex = -1;
    std::vector<Simplex> added;  // rho * x over the (n-1)-faces rho

    // Vertex set of the exchanged tetrahedron.
    std::vector<VertexId> tetra_vertices() const;
};

// Replaces the n-tetrahedron with Yⁿ = σ_{n+1}^{n-1} * x.  The tetra
// must consist of all n+2 facets of an (n+2)-vertex set, each present
// in K.  Throws NotATetrahedron otherwise.
std::pair<SimplicialComplex, ExchangeRecord> apply_delta_y(const SimplicialComplex& k_complex,
                                                           const SphereSubcomplex& tetra);

// Φ on one sphere: identity when the sphere avoids Δⁿ, Dropped when it
// equals Δⁿ, otherwise the used faces are rerouted through x by the
// mod-2 boundary formula.  The result is validated; failure throws
// TransportBroken.
struct Dropped {};
using TransportResult = std::variant<SphereSubcomplex, Dropped>;

TransportResult transport_sphere(const SphereSubcomplex& gamma, const ExchangeRecord& rec);

// Φ on a pair family: pairs with a dropped component are removed, all
// others have both components transported and re-validated.
PairFamily transport_family(const PairFamily& family, const ExchangeRecord& rec,
                            const SimplicialComplex& target);

// P^(n): K^(n) after ΔY(n)-exchanges at all 3ⁿ Γ¹_Ξ tetrahedra.
SimplicialComplex build_P(int n);

// Same, with the exchange order shuffled by `seed` (used to check that
// the digest is order-independent).
SimplicialComplex build_P_ordered(int n, std::uint64_t seed);

// One node of the ΔY family search.
struct FamilyNode {
    SimplicialComplex complex;
    std::string digest;
    std::string parent_digest;  // empty for the root
    std::optional<ExchangeRecord> exchange;
};

struct FamilySearchResult {
    std::vector<FamilyNode> nodes;
    bool truncated = false;
};

// BFS over ΔY(n)-exchanges at every tetrahedron, deduplicated by
// canonical digest, halting once max_nodes distinct complexes are held.
FamilySearchResult family_search(const SimplicialComplex& k_complex, std::size_t max_nodes);

// Degree-multiset certificate for the disjointness of the two exchange
// families (σ_{2n+3}^n vs K^(n)).
struct DisjointnessCertificate {
    int n = 0;
    Int sigma_degree;               // C(n+5, 2)
    std::vector<Int> k_degrees;     // {27, 15}
    bool inequality_holds = false;  // sigma_degree not in k_degrees
    bool degrees_enumerated = false;  // exhaustive check ran (small n)
    bool eqdeg_checked = false;       // Eq.(deg) spot checks ran (small n)
    std::string detail;
};

DisjointnessCertificate hdpet_certificate(int n);

// Eq.(deg) check on one exchange: every (n-2)-simplex of the old
// (n-1)-skeleton keeps its degree; every (n-2)-simplex containing x has
// degree 6.  Returns false (with a message) on any mismatch.
bool check_degree_equation(const SimplicialComplex& before, const SimplicialComplex& after,
                           const ExchangeRecord& rec, std::string* message = nullptr);

}  // namespace plink

#endif  // PLINK_DELTAY_HPP
