#include "plink/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace plink {

SimplicialComplex SimplicialComplex::closure(std::vector<std::string> labels,
                                             std::vector<Simplex> maximal, std::string name) {
    {
        std::set<std::string> seen;
        for (const std::string& l : labels)
            if (!seen.insert(l).second)
                throw DuplicateVertexId("duplicate vertex label: " + l);
    }
    const VertexId v_count = static_cast<VertexId>(labels.size());
    std::vector<bool> covered(labels.size(), false);
    for (const Simplex& s : maximal) {
        for (VertexId v : s.vertices()) {
            if (v >= v_count) throw DuplicateVertexId("simplex vertex id out of table range");
            covered[static_cast<std::size_t>(v)] = true;
        }
    }
    for (VertexId v = 0; v < v_count; ++v)
        if (!covered[static_cast<std::size_t>(v)]) maximal.push_back(Simplex{v});

    // Prune duplicates, then dominated simplices.  The list is kept in
    // size-descending order during the scan so only strictly larger
    // entries are candidate dominators.
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    std::stable_sort(maximal.begin(), maximal.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    std::vector<Simplex> pruned;
    for (const Simplex& s : maximal) {
        bool dominated = false;
        for (const Simplex& big : pruned) {
            if (big.size() <= s.size()) break;
            if (big.contains_all(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) pruned.push_back(s);
    }
    std::sort(pruned.begin(), pruned.end());

    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    data->labels = std::move(labels);
    data->maximal = std::move(pruned);
    data->n = -1;
    for (const Simplex& s : data->maximal) data->n = std::max(data->n, s.dim());

    SimplicialComplex out;
    out.data_ = std::move(data);
    out.cache_ = std::make_shared<Cache>();
    return out;
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    SimplicialComplex out;
    out.data_ = std::move(data);
    out.cache_ = cache_;  // same simplices, cache still valid
    return out;
}

VertexId SimplicialComplex::vertex_by_label(const std::string& label) const {
    for (std::size_t i = 0; i < data_->labels.size(); ++i)
        if (data_->labels[i] == label) return static_cast<VertexId>(i);
    throw Error("unknown vertex label: " + label);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k > dim()) throw DimensionOutOfRange("delta_k: dimension out of range");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_dim.find(k);
    if (it != cache_->by_dim.end()) return it->second;
    std::set<Simplex> acc;
    for (const Simplex& m : data_->maximal) {
        if (m.dim() < k) continue;
        for (Simplex& f : m.faces(k)) acc.insert(std::move(f));
    }
    auto& slot = cache_->by_dim[k];
    slot.assign(acc.begin(), acc.end());
    return slot;
}

const std::unordered_set<Simplex, SimplexHash>& SimplicialComplex::simplex_set(int k) const {
    const std::vector<Simplex>& list = simplices(k);  // materialize first
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->sets.find(k);
    if (it != cache_->sets.end()) return it->second;
    auto& slot = cache_->sets[k];
    slot.insert(list.begin(), list.end());
    return slot;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    if (s.dim() > dim()) return false;
    return simplex_set(s.dim()).count(s) > 0;
}

int SimplicialComplex::degree(const Simplex& s) const {
    if (!has_simplex(s)) throw SimplexNotInComplex("degree: simplex not in complex " + s.to_string());
    int count = 0;
    for (const Simplex& m : data_->maximal)
        if (m.dim() == dim() && m.contains_all(s)) ++count;
    return count;
}

std::size_t SimplicialComplex::closure_size() const {
    std::size_t total = 0;
    for (int k = 0; k <= dim(); ++k) total += simplices(k).size();
    return total;
}

SimplicialComplex skeleton(const SimplicialComplex& k_complex, int k) {
    if (k < 0 || k > k_complex.dim())
        throw DimensionOutOfRange("skeleton: dimension out of range");
    std::vector<Simplex> maximal = k_complex.simplices(k);
    for (const Simplex& m : k_complex.maximal_simplices())
        if (m.dim() < k) maximal.push_back(m);
    return SimplicialComplex::closure(k_complex.labels(), std::move(maximal),
                                      k_complex.name() + "^" + std::to_string(k));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<std::string> labels;
    labels.reserve(k.vertex_count() + l.vertex_count());
    for (const std::string& s : k.labels()) labels.push_back(s + ".0");
    for (const std::string& s : l.labels()) labels.push_back(s + ".1");
    const VertexId offset = static_cast<VertexId>(k.vertex_count());
    std::vector<Simplex> maximal;
    for (const Simplex& a : k.maximal_simplices()) {
        for (const Simplex& b : l.maximal_simplices()) {
            std::vector<VertexId> verts = a.vertices();
            for (VertexId v : b.vertices()) verts.push_back(v + offset);
            maximal.emplace_back(std::move(verts));
        }
    }
    return SimplicialComplex::closure(std::move(labels), std::move(maximal),
                                      k.name() + "*" + l.name());
}

SimplicialComplex boundary_sphere(int m) {
    if (m < 1) throw DimensionOutOfRange("boundary_sphere: m must be >= 1");
    std::vector<std::string> labels;
    std::vector<VertexId> all;
    for (VertexId v = 0; v <= m; ++v) {
        labels.push_back("v" + std::to_string(v));
        all.push_back(v);
    }
    return SimplicialComplex::closure(std::move(labels), Simplex(all).facets(),
                                      "boundary_sigma_" + std::to_string(m));
}

std::vector<SphereSubcomplex> find_tetrahedra(const SimplicialComplex& k_complex) {
    const int n = k_complex.dim();
    std::vector<SphereSubcomplex> out;
    const std::size_t want = static_cast<std::size_t>(n) + 2;
    if (k_complex.vertex_count() < want) return out;

    std::unordered_set<Simplex, SimplexHash> top(k_complex.simplices(n).begin(),
                                                 k_complex.simplices(n).end());
    const VertexId v_count = static_cast<VertexId>(k_complex.vertex_count());
    std::vector<VertexId> subset;
    subset.reserve(want);

    // Depth-first over vertex subsets; prune as soon as some completed
    // (n+1)-subset of the chosen prefix cannot be extended.  With the
    // tiny vertex counts here a plain combination walk is fine.
    auto all_facets_present = [&](const std::vector<VertexId>& s) {
        Simplex full((std::vector<VertexId>(s)));
        for (const Simplex& f : full.facets())
            if (!top.count(f)) return false;
        return true;
    };
    std::vector<std::size_t> idx(want);
    for (std::size_t i = 0; i < want; ++i) idx[i] = i;
    if (static_cast<std::size_t>(v_count) < want) return out;
    while (true) {
        std::vector<VertexId> s(want);
        for (std::size_t i = 0; i < want; ++i) s[i] = static_cast<VertexId>(idx[i]);
        if (all_facets_present(s))
            out.emplace_back(Simplex(s).facets(), SphereKind::Tetrahedron);
        std::size_t i = want;
        bool done = true;
        while (i-- > 0) {
            if (idx[i] != i + static_cast<std::size_t>(v_count) - want) {
                ++idx[i];
                for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

namespace {

void octa_search(const SimplicialComplex& k_complex, int n, std::vector<std::pair<VertexId, VertexId>>& pairs,
                 std::vector<bool>& used, VertexId min_anchor,
                 std::vector<SphereSubcomplex>& out) {
    if (static_cast<int>(pairs.size()) == n + 1) {
        std::vector<Simplex> cross;
        cross.reserve(1u << pairs.size());
        const std::size_t total = 1u << pairs.size();
        for (std::size_t mask = 0; mask < total; ++mask) {
            std::vector<VertexId> verts;
            verts.reserve(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i)
                verts.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
            cross.emplace_back(std::move(verts));
        }
        out.emplace_back(std::move(cross), SphereKind::Octahedron);
        return;
    }
    const VertexId v_count = static_cast<VertexId>(k_complex.vertex_count());
    const int depth = static_cast<int>(pairs.size());
    for (VertexId u = min_anchor; u < v_count; ++u) {
        if (used[static_cast<std::size_t>(u)]) continue;
        for (VertexId v = u + 1; v < v_count; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            // Partial cross check: every selection from the pairs so far
            // extended by u or v must span a face of K.
            bool ok = true;
            const std::size_t combos = 1u << depth;
            for (std::size_t mask = 0; mask < combos && ok; ++mask) {
                for (VertexId cand : {u, v}) {
                    std::vector<VertexId> verts;
                    verts.reserve(static_cast<std::size_t>(depth) + 1);
                    for (int i = 0; i < depth; ++i)
                        verts.push_back((mask >> i) & 1 ? pairs[static_cast<std::size_t>(i)].second
                                                        : pairs[static_cast<std::size_t>(i)].first);
                    verts.push_back(cand);
                    if (!k_complex.has_simplex(Simplex(std::move(verts)))) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            pairs.emplace_back(u, v);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
            octa_search(k_complex, n, pairs, used, u + 1, out);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = false;
            pairs.pop_back();
        }
    }
}

}  // namespace

std::vector<SphereSubcomplex> find_octahedra(const SimplicialComplex& k_complex) {
    const int n = k_complex.dim();
    std::vector<SphereSubcomplex> out;
    if (k_complex.vertex_count() < 2u * (static_cast<std::size_t>(n) + 1)) return out;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<bool> used(k_complex.vertex_count(), false);
    octa_search(k_complex, n, pairs, used, 0, out);
    return out;
}

bool is_trivalent(const SimplicialComplex& k_complex) {
    const int n = k_complex.dim();
    if (n < 1) throw DimensionOutOfRange("is_trivalent needs dim >= 1");
    std::unordered_map<Simplex, int, SimplexHash> facet_count;
    for (const Simplex& m : k_complex.maximal_simplices()) {
        if (m.dim() != n) continue;
        for (const Simplex& f : m.facets()) ++facet_count[f];
    }
    for (const Simplex& f : k_complex.simplices(n - 1)) {
        auto it = facet_count.find(f);
        if (it == facet_count.end() || it->second != 3) return false;
    }
    return true;
}

}  // namespace plink
