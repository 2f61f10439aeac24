#include "plink/crossings.hpp"

#include <algorithm>

#include "plink/rng.hpp"

namespace plink {

int CrossingReport::over_count() const {
    int c = 0;
    for (const CrossingRecord& r : crossings)
        if (r.over && *r.over) ++c;
    return c;
}

namespace {

// Solves for barycentric coordinates (s | t) with
//   sum_i s_i P_i = sum_j t_j Q_j,  sum s = 1,  sum t = 1
// over the first `coord_dim` coordinates of the given points.
std::optional<std::vector<Rat>> barycentric_meet(const std::vector<const ExactPoint*>& p,
                                                 const std::vector<const ExactPoint*>& q,
                                                 std::size_t coord_dim) {
    const std::size_t cols = p.size() + q.size();
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    rows.reserve(coord_dim + 2);
    rhs.reserve(coord_dim + 2);
    for (std::size_t c = 0; c < coord_dim; ++c) {
        std::vector<Rat> row;
        row.reserve(cols);
        for (const ExactPoint* pt : p) row.push_back((*pt)[c]);
        for (const ExactPoint* pt : q) row.push_back(-(*pt)[c]);
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    {
        std::vector<Rat> row(cols, Rat(0));
        for (std::size_t i = 0; i < p.size(); ++i) row[i] = 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(1);
    }
    {
        std::vector<Rat> row(cols, Rat(0));
        for (std::size_t j = 0; j < q.size(); ++j) row[p.size() + j] = 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(1);
    }
    IntMatrix a;
    std::vector<Int> b;
    clear_denominators_rowwise(rows, rhs, a, b);
    return solve_linear(std::move(a), std::move(b));
}

std::vector<const ExactPoint*> image_points(const Simplex& s, const Embedding& e) {
    std::vector<const ExactPoint*> pts;
    pts.reserve(s.size());
    for (VertexId v : s.vertices()) pts.push_back(&e.point(v));
    return pts;
}

}  // namespace

CrossingReport simplex_crossings(const Simplex& sigma, const Simplex& tau, const Embedding& e) {
    const int n = sigma.dim();
    if (tau.dim() != n) throw Error("simplex_crossings: dimension mismatch");
    if (!sigma.disjoint_from(tau)) throw Error("simplex_crossings: simplices share a vertex");
    const bool lifted = e.ambient_dim == 2 * n + 1;
    if (!lifted && e.ambient_dim != 2 * n)
        throw Error("simplex_crossings: ambient dimension must be 2n or 2n+1");
    const std::size_t coord_dim = static_cast<std::size_t>(2 * n);

    CrossingReport report{sigma, tau, {}};
    std::vector<const ExactPoint*> p = image_points(sigma, e);
    std::vector<const ExactPoint*> q = image_points(tau, e);

    auto solution = barycentric_meet(p, q, coord_dim);
    if (!solution)
        throw DegenerateConfiguration("singular crossing system for " + sigma.to_string() + " x " +
                                      tau.to_string());
    bool positive = true;
    for (const Rat& c : *solution) {
        int s = sign_of(c);
        if (s == 0)
            throw DegenerateConfiguration("boundary crossing (zero barycentric coordinate) for " +
                                          sigma.to_string() + " x " + tau.to_string());
        if (s < 0) positive = false;
    }
    if (!positive) return report;  // affine hulls meet outside the simplices

    CrossingRecord rec;
    rec.bary_sigma.assign(solution->begin(), solution->begin() + static_cast<long>(p.size()));
    rec.bary_tau.assign(solution->begin() + static_cast<long>(p.size()), solution->end());
    if (lifted) {
        Rat z_sigma(0), z_tau(0);
        for (std::size_t i = 0; i < p.size(); ++i) z_sigma += rec.bary_sigma[i] * (*p[i])[coord_dim];
        for (std::size_t j = 0; j < q.size(); ++j) z_tau += rec.bary_tau[j] * (*q[j])[coord_dim];
        if (z_sigma == z_tau)
            throw DegenerateConfiguration("equal lifted heights at crossing of " +
                                          sigma.to_string() + " x " + tau.to_string());
        rec.over = z_tau > z_sigma;
    }
    report.crossings.push_back(std::move(rec));
    return report;
}

int lk2_projection(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2,
                   const Embedding& e) {
    const int n = gamma1.dim();
    if (gamma2.dim() != n) throw Error("lk2_projection: sphere dimension mismatch");
    if (e.ambient_dim != 2 * n + 1)
        throw Error("lk2_projection: ambient dimension must be 2n+1");
    if (!gamma1.disjoint_from(gamma2)) throw Error("lk2_projection: spheres share a vertex");
    long long omega = 0;
    for (const Simplex& sigma : gamma1.simplices())
        for (const Simplex& tau : gamma2.simplices())
            omega += simplex_crossings(sigma, tau, e).over_count();
    return static_cast<int>(omega % 2);
}

int lk2_cone(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2, const Embedding& e,
             const ExactPoint& apex) {
    const int n = gamma1.dim();
    if (gamma2.dim() != n) throw Error("lk2_cone: sphere dimension mismatch");
    if (e.ambient_dim != 2 * n + 1) throw Error("lk2_cone: ambient dimension must be 2n+1");
    if (apex.size() != static_cast<std::size_t>(e.ambient_dim))
        throw Error("lk2_cone: apex dimension mismatch");
    if (!gamma1.disjoint_from(gamma2)) throw Error("lk2_cone: spheres share a vertex");

    const std::size_t coord_dim = static_cast<std::size_t>(2 * n + 1);
    long long hits = 0;
    for (const Simplex& sigma : gamma1.simplices()) {
        std::vector<const ExactPoint*> cone = image_points(sigma, e);
        cone.push_back(&apex);
        for (const Simplex& tau : gamma2.simplices()) {
            std::vector<const ExactPoint*> q = image_points(tau, e);
            auto solution = barycentric_meet(cone, q, coord_dim);
            if (!solution)
                throw DegenerateApex("singular cone system at " + sigma.to_string() + " x " +
                                     tau.to_string());
            bool positive = true;
            for (const Rat& c : *solution) {
                int s = sign_of(c);
                if (s == 0)
                    throw DegenerateApex("cone intersection on a face at " + sigma.to_string() +
                                         " x " + tau.to_string());
                if (s < 0) positive = false;
            }
            if (positive) ++hits;
        }
    }
    return static_cast<int>(hits % 2);
}

int lk2_cone_sampled(const SphereSubcomplex& gamma1, const SphereSubcomplex& gamma2,
                     const Embedding& e, std::uint64_t seed) {
    const long long bound = 10 * static_cast<long long>(e.complex.vertex_count()) + 10;
    for (int attempt = 0; attempt < max_resample(); ++attempt) {
        SeededRng rng(mix_seed(seed, 0xC0DEULL + static_cast<std::uint64_t>(attempt)));
        ExactPoint apex;
        apex.reserve(static_cast<std::size_t>(e.ambient_dim));
        for (int c = 0; c < e.ambient_dim; ++c) apex.emplace_back(rng.uniform(-bound, bound));
        try {
            return lk2_cone(gamma1, gamma2, e, apex);
        } catch (const DegenerateApex&) {
            continue;
        }
    }
    throw GenericityExhausted("lk2_cone_sampled: no generic apex after " +
                              std::to_string(max_resample()) + " attempts");
}

long long vkf_total_crossings(const SimplicialComplex& k_complex, const Embedding& e2n) {
    const int n = k_complex.dim();
    if (e2n.ambient_dim != 2 * n) throw Error("vkf: ambient dimension must be 2n");
    const std::vector<Simplex>& top = k_complex.simplices(n);
    long long total = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        for (std::size_t j = i + 1; j < top.size(); ++j) {
            if (!top[i].disjoint_from(top[j])) continue;
            total += simplex_crossings(top[i], top[j], e2n).count();
        }
    }
    return total;
}

int vkf_parity(const SimplicialComplex& k_complex, const Embedding& e2n) {
    return static_cast<int>(vkf_total_crossings(k_complex, e2n) % 2);
}

}  // namespace plink
