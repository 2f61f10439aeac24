#include "plink/embedding.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "plink/rng.hpp"

namespace plink {

int max_resample() {
    static const int value = [] {
        const char* env = std::getenv("PLINK_MAX_RESAMPLE");
        if (!env) return 64;
        int v = std::atoi(env);
        return v > 0 ? v : 64;
    }();
    return value;
}

namespace {

// Affine independence of the selected points by exact rank.
bool affinely_independent(const std::vector<ExactPoint>& points,
                          const std::vector<std::size_t>& subset) {
    if (subset.size() <= 1) return true;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(subset.size() - 1);
    const ExactPoint& base = points[subset[0]];
    for (std::size_t i = 1; i < subset.size(); ++i) {
        std::vector<Rat> row;
        row.reserve(base.size());
        for (std::size_t c = 0; c < base.size(); ++c)
            row.push_back(points[subset[i]][c] - base[c]);
        rows.push_back(std::move(row));
    }
    std::vector<Rat> dummy(rows.size(), Rat(0));
    IntMatrix m;
    std::vector<Int> ignored;
    clear_denominators_rowwise(rows, dummy, m, ignored);
    return rank(std::move(m)) == subset.size() - 1;
}

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

std::optional<std::vector<std::size_t>> find_degenerate_subset(
    const std::vector<ExactPoint>& points, std::size_t order) {
    std::optional<std::vector<std::size_t>> witness;
    for_each_subset(points.size(), order, [&](const std::vector<std::size_t>& subset) {
        if (!affinely_independent(points, subset)) {
            witness = subset;
            return false;
        }
        return true;
    });
    return witness;
}

bool validate_general_position(const std::vector<ExactPoint>& points, std::size_t order) {
    if (order > points.size()) throw Error("validate_general_position: order exceeds point count");
    return !find_degenerate_subset(points, order).has_value();
}

Embedding moment_embedding(const SimplicialComplex& k_complex, int d,
                           const std::vector<long long>& params) {
    if (params.size() != k_complex.vertex_count())
        throw Error("moment_embedding: one parameter per vertex required");
    {
        std::set<long long> distinct(params.begin(), params.end());
        if (distinct.size() != params.size())
            throw DuplicateParameter("moment_embedding: parameters must be pairwise distinct");
    }
    Embedding e;
    e.complex = k_complex;
    e.ambient_dim = d;
    e.provenance.moment_params = params;
    e.points.reserve(params.size());
    for (long long t : params) {
        ExactPoint p;
        p.reserve(static_cast<std::size_t>(d));
        Int power = 1;
        for (int c = 0; c < d; ++c) {
            power *= t;
            p.emplace_back(power);
        }
        e.points.push_back(std::move(p));
    }
    return e;
}

namespace {

// Unit lower-triangular times unit upper-triangular with small random
// entries: determinant 1, integer inverse.
IntMatrix random_unimodular_shear(int d, SeededRng& rng) {
    IntMatrix lower(static_cast<std::size_t>(d), std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
    IntMatrix upper = lower;
    for (int i = 0; i < d; ++i) {
        lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < i; ++j)
            lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.uniform(-4, 4);
        for (int j = i + 1; j < d; ++j)
            upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.uniform(-4, 4);
    }
    IntMatrix shear(static_cast<std::size_t>(d), std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                shear[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    upper[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return shear;
}

ExactPoint apply_matrix(const IntMatrix& m, const ExactPoint& p) {
    ExactPoint out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < p.size(); ++j) acc += Rat(m[i][j]) * p[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace

Embedding randomized_embedding(const SimplicialComplex& k_complex, int d, std::uint64_t seed) {
    const std::size_t v_count = k_complex.vertex_count();
    const long long bound = 10 * static_cast<long long>(v_count);
    const std::size_t point_order = std::min<std::size_t>(static_cast<std::size_t>(d) + 1, v_count);
    const std::size_t proj_order = std::min<std::size_t>(static_cast<std::size_t>(d), v_count);

    for (int attempt = 0; attempt < max_resample(); ++attempt) {
        SeededRng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<long long> params = rng.sample_distinct(-bound, bound, v_count);
        rng.shuffle(params);
        Embedding e = moment_embedding(k_complex, d, params);
        IntMatrix shear = random_unimodular_shear(d, rng);
        for (ExactPoint& p : e.points) p = apply_matrix(shear, p);
        e.provenance.seed = seed;
        e.provenance.shear = std::move(shear);

        if (!validate_general_position(e.points, point_order)) continue;
        if (d >= 2) {
            Embedding shadow = project(e);
            if (!validate_general_position(shadow.points, proj_order)) continue;
        }
        return e;
    }
    throw GenericityExhausted("randomized_embedding: no generic sample after " +
                              std::to_string(max_resample()) + " attempts");
}

Embedding project(const Embedding& e) {
    if (e.ambient_dim < 1) throw Error("project: ambient dimension must be >= 1");
    Embedding out;
    out.complex = e.complex;
    out.ambient_dim = e.ambient_dim - 1;
    out.provenance = e.provenance;
    out.points.reserve(e.points.size());
    for (const ExactPoint& p : e.points)
        out.points.emplace_back(p.begin(), p.end() - 1);
    return out;
}

Embedding manual_embedding(const SimplicialComplex& k_complex, int d,
                           std::vector<ExactPoint> points) {
    if (points.size() != k_complex.vertex_count())
        throw Error("manual_embedding: one point per vertex required");
    for (const ExactPoint& p : points)
        if (p.size() != static_cast<std::size_t>(d))
            throw Error("manual_embedding: point dimension mismatch");
    Embedding e;
    e.complex = k_complex;
    e.ambient_dim = d;
    e.points = std::move(points);
    return e;
}

}  // namespace plink
