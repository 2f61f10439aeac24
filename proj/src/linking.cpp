#include "plink/linking.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace plink {

std::string to_string(EnumerationMode m) {
    switch (m) {
        case EnumerationMode::Pattern: return "pattern";
        case EnumerationMode::Cycles: return "cycles";
        case EnumerationMode::Transported: return "transported";
    }
    return "?";
}

PairFamily make_family(SimplicialComplex complex, std::vector<SpherePair> pairs,
                       EnumerationMode mode) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return PairFamily{std::move(complex), std::move(pairs), mode};
}

PairFamily lambda_pattern(const SimplicialComplex& k_complex) {
    std::vector<SphereSubcomplex> spheres = find_tetrahedra(k_complex);
    {
        std::vector<SphereSubcomplex> octas = find_octahedra(k_complex);
        spheres.insert(spheres.end(), octas.begin(), octas.end());
    }
    std::vector<SpherePair> pairs;
    for (std::size_t i = 0; i < spheres.size(); ++i)
        for (std::size_t j = i + 1; j < spheres.size(); ++j)
            if (spheres[i].disjoint_from(spheres[j]))
                pairs.emplace_back(spheres[i], spheres[j]);
    return make_family(k_complex, std::move(pairs), EnumerationMode::Pattern);
}

namespace {

// Exhaustive simple-cycle enumeration: each cycle discovered once, with
// its smallest vertex as the anchor and the direction fixed by the
// anchor's two neighbours.
std::vector<SphereSubcomplex> all_cycles(const SimplicialComplex& graph, std::size_t max_cycles) {
    const std::size_t v_count = graph.vertex_count();
    std::vector<std::vector<VertexId>> adj(v_count);
    for (const Simplex& e : graph.simplices(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    std::vector<SphereSubcomplex> cycles;
    std::vector<VertexId> path;
    std::vector<bool> on_path(v_count, false);

    auto emit = [&](const std::vector<VertexId>& cycle_path) {
        std::vector<Simplex> edges;
        edges.reserve(cycle_path.size());
        for (std::size_t i = 0; i < cycle_path.size(); ++i)
            edges.push_back(Simplex{cycle_path[i], cycle_path[(i + 1) % cycle_path.size()]});
        cycles.emplace_back(std::move(edges), SphereKind::Cycle);
        if (cycles.size() > max_cycles)
            throw ComplexTooLarge("cycle enumeration exceeded bound of " +
                                  std::to_string(max_cycles));
    };

    // DFS from anchor; only vertices > anchor may appear inside the
    // path, and the second vertex must be smaller than the last one to
    // kill the direction duplicate.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId anchor, VertexId current) {
        for (VertexId next : adj[static_cast<std::size_t>(current)]) {
            if (next == anchor) {
                if (path.size() >= 3 && path[1] < path.back()) emit(path);
                continue;
            }
            if (next < anchor || on_path[static_cast<std::size_t>(next)]) continue;
            path.push_back(next);
            on_path[static_cast<std::size_t>(next)] = true;
            dfs(anchor, next);
            on_path[static_cast<std::size_t>(next)] = false;
            path.pop_back();
        }
    };

    for (VertexId anchor = 0; anchor < static_cast<VertexId>(v_count); ++anchor) {
        path = {anchor};
        on_path[static_cast<std::size_t>(anchor)] = true;
        dfs(anchor, anchor);
        on_path[static_cast<std::size_t>(anchor)] = false;
    }
    return cycles;
}

}  // namespace

PairFamily lambda_cycles(const SimplicialComplex& graph, std::size_t max_cycles) {
    if (graph.dim() != 1) throw DimensionOutOfRange("lambda_cycles: complex must be a graph");
    std::vector<SphereSubcomplex> cycles = all_cycles(graph, max_cycles);
    std::vector<SpherePair> pairs;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (cycles[i].disjoint_from(cycles[j]))
                pairs.emplace_back(cycles[i], cycles[j]);
    return make_family(graph, std::move(pairs), EnumerationMode::Cycles);
}

std::vector<int> pairwise_lk2(const PairFamily& family, const Embedding& e) {
    std::vector<int> out;
    out.reserve(family.pairs.size());
    for (const SpherePair& pair : family.pairs)
        out.push_back(lk2_projection(pair.first(), pair.second(), e));
    return out;
}

int parity_sum(const PairFamily& family, const Embedding& e) {
    long long total = 0;
    for (const SpherePair& pair : family.pairs)
        total += lk2_projection(pair.first(), pair.second(), e);
    return static_cast<int>(total % 2);
}

std::pair<bool, std::optional<SpherePair>> exists_linked(const PairFamily& family,
                                                         const Embedding& e) {
    for (const SpherePair& pair : family.pairs)
        if (lk2_projection(pair.first(), pair.second(), e) == 1) return {true, pair};
    return {false, std::nullopt};
}

}  // namespace plink
