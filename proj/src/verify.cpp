#include "plink/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "plink/canonical.hpp"
#include "plink/constructions.hpp"

namespace plink {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Cgs: return "cgs";
        case TheoremId::OldIl1: return "oldil1";
        case TheoremId::OldIl2: return "oldil2";
        case TheoremId::NewIl: return "newil";
        case TheoremId::Vkf: return "vkf";
        case TheoremId::DeltaYil: return "deltayil";
        case TheoremId::Trivalent: return "trivalent";
        case TheoremId::PetersenFamily: return "petersen-family";
        case TheoremId::HdPet: return "hdpet";
    }
    return "?";
}

TheoremId theorem_from_string(const std::string& name) {
    for (TheoremId id :
         {TheoremId::Cgs, TheoremId::OldIl1, TheoremId::OldIl2, TheoremId::NewIl, TheoremId::Vkf,
          TheoremId::DeltaYil, TheoremId::Trivalent, TheoremId::PetersenFamily, TheoremId::HdPet})
        if (to_string(id) == name) return id;
    throw Error("unknown theorem name: " + name);
}

namespace {

std::string describe_pair(const SpherePair& pair) {
    return pair.first().to_string() + " / " + pair.second().to_string();
}

// Runs `trials` independent evaluations, optionally across threads;
// outcome i lands at results[i] regardless of scheduling.
std::vector<int> run_trials(int trials, int jobs, const std::function<int(int)>& one_trial) {
    std::vector<int> results(static_cast<std::size_t>(trials), 0);
    if (jobs <= 1) {
        for (int t = 0; t < trials; ++t) results[static_cast<std::size_t>(t)] = one_trial(t);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> workers;
    std::mutex err_mu;
    std::exception_ptr first_error;
    for (int w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                int t = next.fetch_add(1);
                if (t >= trials) return;
                try {
                    results[static_cast<std::size_t>(t)] = one_trial(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        }));
    }
    for (auto& w : workers) w.get();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

struct ParityTask {
    SimplicialComplex complex;
    PairFamily family;
    int ambient_dim;
};

VerificationReport parity_report(TheoremId id, int n, int trials, std::uint64_t seed, int jobs,
                                 const ParityTask& task, int expected_parity) {
    VerificationReport report;
    report.theorem = to_string(id);
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.results = run_trials(trials, jobs, [&](int t) {
        return run_generic_trial(task.complex, task.ambient_dim, mix_seed(seed, static_cast<std::uint64_t>(t)),
                                 [&](const Embedding& e) { return parity_sum(task.family, e); });
    });
    for (int t = 0; t < trials; ++t) {
        if (report.results[static_cast<std::size_t>(t)] != expected_parity)
            report.violations.push_back("trial " + std::to_string(t) + ": parity " +
                                        std::to_string(report.results[static_cast<std::size_t>(t)]) +
                                        ", expected " + std::to_string(expected_parity));
    }
    report.ok = report.violations.empty();
    std::ostringstream os;
    os << task.complex.name() << ": |family| = " << task.family.pairs.size() << ", parity "
       << expected_parity << " in " << trials << " trials";
    report.detail = os.str();
    return report;
}

VerificationReport verify_cgs(int n, int trials, std::uint64_t seed, int jobs) {
    if (n != 1) throw DimensionOutOfRange("cgs is the n = 1 case");
    SimplicialComplex k6 = sigma_skeleton(5, 1).renamed("K6");
    ParityTask task{k6, lambda_cycles(k6), 3};
    return parity_report(TheoremId::Cgs, n, trials, seed, jobs, task, 1);
}

VerificationReport verify_oldil1(int n, int trials, std::uint64_t seed, int jobs) {
    SimplicialComplex k = sigma_skeleton(2 * n + 3, n);
    ParityTask task{k, lambda_pattern(k), 2 * n + 1};
    return parity_report(TheoremId::OldIl1, n, trials, seed, jobs, task, 1);
}

VerificationReport verify_newil(int n, int trials, std::uint64_t seed, int jobs) {
    auto [k, fx] = build_K(n);
    ParityTask task{k, lambda_pattern(k), 2 * n + 1};
    return parity_report(TheoremId::NewIl, n, trials, seed, jobs, task, 1);
}

VerificationReport verify_oldil2(int n, int trials, std::uint64_t seed, int jobs) {
    SimplicialComplex k = fold_join(4, n + 1);
    PairFamily family = n == 1 ? lambda_cycles(k) : lambda_pattern(k);

    VerificationReport report;
    report.theorem = to_string(TheoremId::OldIl2);
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    std::mutex witness_mu;
    std::vector<std::string> misses;
    report.results = run_trials(trials, jobs, [&](int t) {
        return run_generic_trial(k, 2 * n + 1, mix_seed(seed, static_cast<std::uint64_t>(t)),
                                 [&](const Embedding& e) {
                                     auto [found, witness] = exists_linked(family, e);
                                     return found ? 1 : 0;
                                 });
    });
    for (int t = 0; t < trials; ++t) {
        if (report.results[static_cast<std::size_t>(t)] == 1) continue;
        std::string miss = "trial " + std::to_string(t) + ": no linked pair in the " +
                           to_string(family.mode) + " family";
        // At n = 1 the cycle family is the whole of Lambda, so a miss
        // falsifies the theorem.  For n >= 2 the family is restricted to
        // octahedron pairs and the run is an existence check only.
        if (n == 1)
            report.violations.push_back(miss);
        else
            misses.push_back(miss);
    }
    report.ok = report.violations.empty();
    std::ostringstream os;
    os << k.name() << ": |family| = " << family.pairs.size() << " (" << to_string(family.mode)
       << (n >= 2 ? ", existence-only check" : "") << "); linked pair found in "
       << std::count(report.results.begin(), report.results.end(), 1) << "/" << trials
       << " trials";
    if (!misses.empty()) os << "; " << misses.size() << " trials without a linked octahedron pair";
    report.detail = os.str();
    return report;
}

VerificationReport verify_vkf(int n, int trials, std::uint64_t seed, int jobs) {
    SimplicialComplex sigma = sigma_skeleton(2 * n + 2, n);
    SimplicialComplex join3 = fold_join(3, n + 1);

    VerificationReport report;
    report.theorem = to_string(TheoremId::Vkf);
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    std::mutex viol_mu;
    report.results = run_trials(trials, jobs, [&](int t) {
        int p_sigma =
            run_generic_trial(sigma, 2 * n, mix_seed(seed, 2 * static_cast<std::uint64_t>(t)),
                              [&](const Embedding& e) { return vkf_parity(sigma, e); });
        int p_join =
            run_generic_trial(join3, 2 * n, mix_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1),
                              [&](const Embedding& e) { return vkf_parity(join3, e); });
        if (p_sigma != 1) {
            std::lock_guard<std::mutex> lock(viol_mu);
            report.violations.push_back("trial " + std::to_string(t) + ": " + sigma.name() +
                                        " parity " + std::to_string(p_sigma));
        }
        if (p_join != 1) {
            std::lock_guard<std::mutex> lock(viol_mu);
            report.violations.push_back("trial " + std::to_string(t) + ": " + join3.name() +
                                        " parity " + std::to_string(p_join));
        }
        return (p_sigma == 1 && p_join == 1) ? 1 : 0;
    });
    report.ok = report.violations.empty();
    report.detail = sigma.name() + " and " + join3.name() + " immersed in R^" +
                    std::to_string(2 * n) + ", parity 1 expected";
    return report;
}

VerificationReport verify_deltayil(int n, int trials, std::uint64_t seed, int jobs) {
    // Walk the Gamma^1_Xi exchange sequence from K^(n); after each
    // exchange transport the running pair family.  Check exists_linked
    // at every prefix length (all 3^n of them, which covers P^(n)).
    auto [k, fx] = build_K(n);
    PairFamily family = lambda_pattern(k);
    std::vector<std::pair<SimplicialComplex, PairFamily>> checkpoints;
    SimplicialComplex current = k;
    for (const SphereSubcomplex& tetra : gamma_xi_tetrahedra(n)) {
        auto [next, rec] = apply_delta_y(current, tetra);
        family = transport_family(family, rec, next);
        current = next;
        checkpoints.emplace_back(current, family);
    }

    VerificationReport report;
    report.theorem = to_string(TheoremId::DeltaYil);
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    std::mutex viol_mu;
    report.results = run_trials(trials, jobs, [&](int t) {
        int all_ok = 1;
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            const auto& [complex, fam] = checkpoints[c];
            int found = run_generic_trial(
                complex, 2 * n + 1,
                mix_seed(seed, static_cast<std::uint64_t>(t) * 131 + c),
                [&](const Embedding& e) { return exists_linked(fam, e).first ? 1 : 0; });
            if (!found) {
                all_ok = 0;
                std::lock_guard<std::mutex> lock(viol_mu);
                report.violations.push_back("trial " + std::to_string(t) + ": no linked pair after " +
                                            std::to_string(c + 1) + " exchanges");
            }
        }
        return all_ok;
    });
    report.ok = report.violations.empty();
    std::ostringstream os;
    os << "transported families along " << checkpoints.size() << " exchanges from " << k.name()
       << " (final: " << checkpoints.back().second.pairs.size() << " pairs on P^(" << n << "))";
    report.detail = os.str();
    return report;
}

VerificationReport verify_trivalent(int n, std::uint64_t seed) {
    VerificationReport report;
    report.theorem = to_string(TheoremId::Trivalent);
    report.n = n;
    report.trials = 1;
    report.seed = seed;
    SimplicialComplex p = build_P(n);
    bool ok = is_trivalent(p);
    report.results = {ok ? 1 : 0};
    if (!ok) report.violations.push_back(p.name() + " is not trivalent");
    report.ok = ok;
    report.detail = p.name() + ": " + std::to_string(p.vertex_count()) + " vertices, " +
                    std::to_string(p.simplices(n).size()) + " top simplices";
    return report;
}

VerificationReport verify_petersen_family(std::uint64_t seed) {
    VerificationReport report;
    report.theorem = to_string(TheoremId::PetersenFamily);
    report.n = 1;
    report.trials = 1;
    report.seed = seed;

    SimplicialComplex k6 = sigma_skeleton(5, 1).renamed("K6");
    auto [k331, fx] = build_K(1);
    FamilySearchResult f6 = family_search(k6, 64);
    FamilySearchResult f331 = family_search(k331, 64);

    std::set<std::string> d6, d331;
    for (const FamilyNode& node : f6.nodes) d6.insert(node.digest);
    for (const FamilyNode& node : f331.nodes) d331.insert(node.digest);
    std::set<std::string> uni = d6;
    uni.insert(d331.begin(), d331.end());
    std::vector<std::string> inter;
    std::set_intersection(d6.begin(), d6.end(), d331.begin(), d331.end(),
                          std::back_inserter(inter));

    bool edges_ok = true;
    for (const auto* res : {&f6, &f331})
        for (const FamilyNode& node : res->nodes)
            if (node.complex.simplices(1).size() != 15) edges_ok = false;

    SimplicialComplex p10 = build_P(1);
    SimplicialComplex petersen = kneser_graph(5, 2);
    bool p_iso = is_isomorphic(p10, petersen);
    bool p_in_family = uni.count(canonicalize(p10).digest) > 0;

    bool ok = uni.size() == 7 && inter.size() == 3 && edges_ok && p_iso && p_in_family &&
              !f6.truncated && !f331.truncated;
    report.results = {ok ? 1 : 0};
    report.ok = ok;
    std::ostringstream os;
    os << "|F(K6) u F(K331)| = " << uni.size() << ", |intersection| = " << inter.size()
       << ", all 15 edges: " << (edges_ok ? "yes" : "NO")
       << ", P^(1) ~ Kneser(5,2): " << (p_iso ? "yes" : "NO");
    report.detail = os.str();
    if (!ok) report.violations.push_back(report.detail);
    return report;
}

VerificationReport verify_hdpet(int n, std::uint64_t seed) {
    VerificationReport report;
    report.theorem = to_string(TheoremId::HdPet);
    report.n = n;
    report.trials = 1;
    report.seed = seed;
    std::ostringstream os;
    bool ok = true;
    const int lo = n >= 2 ? n : 2;
    const int hi = n >= 2 ? n : 10;
    for (int m = lo; m <= hi; ++m) {
        DisjointnessCertificate cert = hdpet_certificate(m);
        if (!cert.inequality_holds) {
            ok = false;
            report.violations.push_back("n=" + std::to_string(m) + ": " + cert.detail);
        }
        os << "n=" << m << ": " << cert.detail << (m < hi ? " | " : "");
    }
    report.results = {ok ? 1 : 0};
    report.ok = ok;
    report.detail = os.str();
    return report;
}

}  // namespace

VerificationReport verify_theorem(TheoremId id, int n, int trials, std::uint64_t seed, int jobs) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    switch (id) {
        case TheoremId::Cgs: report = verify_cgs(n, trials, seed, jobs); break;
        case TheoremId::OldIl1: report = verify_oldil1(n, trials, seed, jobs); break;
        case TheoremId::OldIl2: report = verify_oldil2(n, trials, seed, jobs); break;
        case TheoremId::NewIl: report = verify_newil(n, trials, seed, jobs); break;
        case TheoremId::Vkf: report = verify_vkf(n, trials, seed, jobs); break;
        case TheoremId::DeltaYil: report = verify_deltayil(n, trials, seed, jobs); break;
        case TheoremId::Trivalent: report = verify_trivalent(n, seed); break;
        case TheoremId::PetersenFamily: report = verify_petersen_family(seed); break;
        case TheoremId::HdPet: report = verify_hdpet(n, seed); break;
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace plink
