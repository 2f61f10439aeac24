#ifndef PLINK_EMBEDDING_HPP
#define PLINK_EMBEDDING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plink/complex.hpp"
#include "plink/linalg.hpp"
#include "plink/rational.hpp"

namespace plink {

using ExactPoint = std::vector<Rat>;

// Resample budget shared by every detect-and-resample loop; reads
// PLINK_MAX_RESAMPLE once (default 64).
int max_resample();

struct EmbeddingProvenance {
    std::uint64_t seed = 0;
    std::vector<long long> moment_params;  // per vertex, empty for manual points
    IntMatrix shear;                       // empty means identity
};

// A linear-on-vertices map of a complex into R^d with exact rational
// coordinates.  Construction validates nothing; the factories below do.
struct Embedding {
    SimplicialComplex complex;
    int ambient_dim = 0;
    std::vector<ExactPoint> points;  // indexed by vertex id
    EmbeddingProvenance provenance;

    const ExactPoint& point(VertexId v) const { return points.at(static_cast<std::size_t>(v)); }
};

// True iff every subset of `order` points is affinely independent.
bool validate_general_position(const std::vector<ExactPoint>& points, std::size_t order);

// Same check, reporting a witness subset (point indices) on failure.
std::optional<std::vector<std::size_t>> find_degenerate_subset(
    const std::vector<ExactPoint>& points, std::size_t order);

// Moment-curve embedding v -> (t_v, t_v^2, ..., t_v^d); parameters must
// be pairwise distinct, which makes every (d+1)-subset affinely
// independent outright.
Embedding moment_embedding(const SimplicialComplex& k_complex, int d,
                           const std::vector<long long>& params);

// Seeded generic embedding: moment parameters sampled without
// replacement from [-10|V|, 10|V|], randomly assigned to vertices, then
// an invertible integer shear.  General position is revalidated at
// order min(d+1, |V|) and, for the projection, at order min(d, |V|);
// on failure the sub-seed is bumped, up to max_resample() attempts.
Embedding randomized_embedding(const SimplicialComplex& k_complex, int d, std::uint64_t seed);

// Drops the last coordinate of every point (the projection π).
Embedding project(const Embedding& e);

// Assemble an embedding from explicit points (fixtures, JSON input).
Embedding manual_embedding(const SimplicialComplex& k_complex, int d,
                           std::vector<ExactPoint> points);

}  // namespace plink

#endif  // PLINK_EMBEDDING_HPP
