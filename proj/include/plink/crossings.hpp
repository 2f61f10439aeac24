#ifndef PLINK_CROSSINGS_HPP
#define PLINK_CROSSINGS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plink/embedding.hpp"
#include "plink/spheres.hpp"

namespace plink {

// One transversal double point between two projected n-simplices.  The
// barycentric coordinates are strictly positive by construction; `over`
// is present only when the ambient embedding carries a lift (dim 2n+1)
// and is true iff tau passes over sigma.
struct CrossingRecord {
    std::vector<Rat> bary_sigma;
    std::vector<Rat> bary_tau;
    std::optional<bool> over;
};

struct CrossingReport {
    Simplex sigma;
    Simplex tau;
    std::vector<CrossingRecord> crossings;  // at most one for linear simplices

    int count() const { return static_cast<int>(crossings.size()); }
    // Number of double points where tau passes over sigma.
    int over_count() const;
};

// Double points between the images of two disjoint n-simplices.  The
// embedding must have ambient dimension 2n+1 (projection and lift; the
// over flags are filled in) or 2n (generic immersion; pure count).
// Throws DegenerateConfiguration when the linear system is singular, a
// barycentric coordinate vanishes, or the lifted heights coincide.
CrossingReport simplex_crossings(const Simplex& sigma, const Simplex& tau, const Embedding& e);

// Z2-linking number of two disjoint sphere subcomplexes under a
// (2n+1)-dimensional embedding, via the projection: the parity of
// crossings where gamma2 passes over gamma1.
int lk2_projection(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2,
                   const Embedding& e);

// Independent route: the parity of transversal intersections between
// the cone over gamma1 from `apex` and the n-simplices of gamma2.
// Throws DegenerateApex when the apex is not generic for some solve.
int lk2_cone(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2, const Embedding& e,
             const ExactPoint& apex);

// lk2_cone with seeded apex sampling; resamples the apex on
// DegenerateApex up to max_resample() times.
int lk2_cone_sampled(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2,
                     const Embedding& e, std::uint64_t seed);

// van Kampen--Flores double-point parity of a generic immersion into
// R^{2n}: total crossing count over unordered disjoint pairs of
// n-simplices, mod 2.
int vkf_parity(const SimplicialComplex& k_complex, const Embedding& e2n);

// Total double points over unordered disjoint pairs (not reduced mod 2).
long long vkf_total_crossings(const SimplicialComplex& k_complex, const Embedding& e2n);

}  // namespace plink

#endif  // PLINK_CROSSINGS_HPP
