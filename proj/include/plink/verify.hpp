#ifndef PLINK_VERIFY_HPP
#define PLINK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plink/deltay.hpp"
#include "plink/linking.hpp"
#include "plink/rng.hpp"

namespace plink {

enum class TheoremId {
    Cgs,             // K6 cycle family, parity 1
    OldIl1,          // sigma_{2n+3}^n tetra pairs, parity 1
    OldIl2,          // [4]^{*n+1}, linked pair exists
    NewIl,           // K^(n) tetra-octa pairs, parity 1
    Vkf,             // sigma_{2n+2}^n and [3]^{*n+1} immersions, parity 1
    DeltaYil,        // exchange transports along Gamma^1_Xi keep a linked pair
    Trivalent,       // P^(n) is trivalent
    PetersenFamily,  // n = 1 family search reproduces the seven graphs
    HdPet,           // degree-multiset disjointness certificate
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

struct VerificationReport {
    std::string theorem;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<int> results;             // one entry per trial (or one, for
                                          // structural checks)
    std::vector<std::string> violations;  // serialized witnesses
    long long elapsed_ms = 0;
    bool ok = false;
    std::string detail;
};

// Builds the complex, enumerates the family, samples `trials` generic
// embeddings (resampling whole embeddings on degeneracy) and evaluates
// the theorem's parity or existence statement per trial.  `jobs` > 1
// runs trials concurrently; results are merged by trial index.
VerificationReport verify_theorem(TheoremId id, int n, int trials, std::uint64_t seed,
                                  int jobs = 1);

// Per-trial embedding sampling shared by the runners and the acceptance
// suite: retries whole embeddings while crossing predicates report
// degeneracy.  `evaluate` returns the trial's 0/1 outcome.
template <typename Evaluate>
int run_generic_trial(const SimplicialComplex& complex, int ambient_dim, std::uint64_t trial_seed,
                      Evaluate&& evaluate) {
    for (int attempt = 0; attempt < max_resample(); ++attempt) {
        Embedding e = randomized_embedding(complex, ambient_dim,
                                           mix_seed(trial_seed, 7919ULL * attempt));
        try {
            return evaluate(e);
        } catch (const DegenerateConfiguration&) {
            continue;
        }
    }
    throw GenericityExhausted("trial could not reach a generic embedding");
}

}  // namespace plink

#endif  // PLINK_VERIFY_HPP
