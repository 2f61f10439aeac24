#include "plink/constructions.hpp"

#include <string>

namespace plink {

namespace {

std::vector<std::string> numbered_labels(const std::string& prefix, int count) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

std::vector<std::string> factor_labels(int n) {
    std::vector<std::string> labels;
    labels.push_back("b");
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < 3; ++j)
            labels.push_back("a_" + std::to_string(j) + "^" + std::to_string(i));
    return labels;
}

// All Type I simplices of K^(n): one point chosen from each factor.
std::vector<Simplex> type_one_simplices(const FactorIndexing& fx) {
    std::vector<Simplex> out;
    const int folds = fx.n + 1;
    std::vector<int> choice(static_cast<std::size_t>(folds), 0);
    while (true) {
        std::vector<VertexId> verts;
        verts.reserve(static_cast<std::size_t>(folds));
        for (int i = 0; i < folds; ++i) verts.push_back(fx.factor_point(i, choice[static_cast<std::size_t>(i)]));
        out.emplace_back(std::move(verts));
        int i = folds - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == 2) choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return out;
}

// All Type II simplices: apex + one point from each factor except one.
std::vector<Simplex> type_two_simplices(const FactorIndexing& fx) {
    std::vector<Simplex> out;
    const int folds = fx.n + 1;
    for (int omit = 0; omit < folds; ++omit) {
        std::vector<int> choice(static_cast<std::size_t>(folds), 0);  // entry at `omit` ignored
        while (true) {
            std::vector<VertexId> verts = {fx.apex};
            for (int i = 0; i < folds; ++i)
                if (i != omit) verts.push_back(fx.factor_point(i, choice[static_cast<std::size_t>(i)]));
            out.emplace_back(std::move(verts));
            int i = folds - 1;
            while (i >= 0 && (i == omit || choice[static_cast<std::size_t>(i)] == 2)) {
                if (i != omit) choice[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++choice[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

}  // namespace

SimplicialComplex sigma_skeleton(int m, int n) {
    if (n < 0 || n > m) throw DimensionOutOfRange("sigma_skeleton: need 0 <= n <= m");
    std::vector<VertexId> all;
    for (VertexId v = 0; v <= m; ++v) all.push_back(v);
    return SimplicialComplex::closure(numbered_labels("v", m + 1), Simplex(all).faces(n),
                                      "sigma_" + std::to_string(m) + "^" + std::to_string(n));
}

SimplicialComplex fold_join(int k, int folds) {
    if (k < 1 || folds < 1) throw DimensionOutOfRange("fold_join: need k >= 1, folds >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < folds; ++i)
        for (int j = 0; j < k; ++j)
            labels.push_back("a_" + std::to_string(j) + "^" + std::to_string(i));
    std::vector<Simplex> maximal;
    std::vector<int> choice(static_cast<std::size_t>(folds), 0);
    while (true) {
        std::vector<VertexId> verts;
        verts.reserve(static_cast<std::size_t>(folds));
        for (int i = 0; i < folds; ++i) verts.push_back(i * k + choice[static_cast<std::size_t>(i)]);
        maximal.emplace_back(std::move(verts));
        int i = folds - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == k - 1) choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return SimplicialComplex::closure(std::move(labels), std::move(maximal),
                                      "[" + std::to_string(k) + "]^*" + std::to_string(folds));
}

std::pair<SimplicialComplex, FactorIndexing> build_K(int n) {
    if (n < 1) throw DimensionOutOfRange("build_K: need n >= 1");
    FactorIndexing fx{n};
    std::vector<Simplex> maximal = type_one_simplices(fx);
    std::vector<Simplex> type2 = type_two_simplices(fx);
    maximal.insert(maximal.end(), type2.begin(), type2.end());
    SimplicialComplex k = SimplicialComplex::closure(factor_labels(n), std::move(maximal),
                                                     "K^(" + std::to_string(n) + ")");
    return {std::move(k), fx};
}

SimplicialComplex build_H(int n) {
    if (n < 1) throw DimensionOutOfRange("build_H: need n >= 1");
    FactorIndexing fx{n};
    // Re-index without the apex: factor i point j -> 3i + j.
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < 3; ++j)
            labels.push_back("a_" + std::to_string(j) + "^" + std::to_string(i));
    std::vector<Simplex> maximal;
    for (const Simplex& s : type_one_simplices(fx)) {
        std::vector<VertexId> verts;
        verts.reserve(s.size());
        for (VertexId v : s.vertices()) verts.push_back(v - 1);
        maximal.emplace_back(std::move(verts));
    }
    return SimplicialComplex::closure(std::move(labels), std::move(maximal),
                                      "H^(" + std::to_string(n) + ")");
}

std::vector<Simplex> xi_set(int n) {
    if (n < 1) throw DimensionOutOfRange("xi_set: need n >= 1");
    FactorIndexing fx{n};
    std::vector<Simplex> out;
    const int folds = n + 1;
    std::vector<int> choice(static_cast<std::size_t>(folds), 0);
    while (true) {
        int sum = 0;
        for (int c : choice) sum += c;
        if (sum % 3 == 0) {
            std::vector<VertexId> verts;
            for (int i = 0; i < folds; ++i) verts.push_back(fx.factor_point(i, choice[static_cast<std::size_t>(i)]));
            out.emplace_back(std::move(verts));
        }
        int i = folds - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == 2) choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<SphereSubcomplex> gamma_xi_tetrahedra(int n) {
    FactorIndexing fx{n};
    std::vector<SphereSubcomplex> out;
    for (const Simplex& xi : xi_set(n))
        out.emplace_back(xi.with(fx.apex).facets(), SphereKind::Tetrahedron);
    return out;
}

SimplicialComplex kneser_graph(int m, int k) {
    // Vertices: k-subsets of [m] in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        subsets.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == i + m - k) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::vector<std::string> labels;
    for (const auto& s : subsets) {
        std::string l = "{";
        for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
        labels.push_back(l + "}");
    }
    std::vector<Simplex> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            bool disjoint = true;
            for (int x : subsets[a])
                for (int y : subsets[b])
                    if (x == y) disjoint = false;
            if (disjoint)
                edges.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
        }
    }
    return SimplicialComplex::closure(std::move(labels), std::move(edges),
                                      "kneser(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

}  // namespace plink
