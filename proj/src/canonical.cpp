#include "plink/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace plink {

namespace {

// Ordered partition of the vertex set; the cell order is derived from
// invariant data only, so it is preserved by isomorphism.
using Partition = std::vector<std::vector<VertexId>>;

struct SearchContext {
    const SimplicialComplex* complex = nullptr;
    std::vector<std::vector<std::size_t>> incidence;  // vertex -> maximal indices
    std::vector<Simplex> best;
    std::vector<int> best_label_of;
    bool have_best = false;
};

std::vector<int> cell_index_of(const Partition& p, std::size_t v_count) {
    std::vector<int> color(v_count, 0);
    for (std::size_t c = 0; c < p.size(); ++c)
        for (VertexId v : p[c]) color[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return color;
}

// One refinement round: split every cell by the multiset of colored
// incidences of its vertices.  Returns true when something split.
bool refine_round(const SimplicialComplex& k, const std::vector<std::vector<std::size_t>>& incidence,
                  Partition& p) {
    const std::size_t v_count = k.vertex_count();
    std::vector<int> color = cell_index_of(p, v_count);
    const auto& maximal = k.maximal_simplices();

    bool split_any = false;
    Partition next;
    next.reserve(p.size());
    for (const auto& cell : p) {
        if (cell.size() == 1) {
            next.push_back(cell);
            continue;
        }
        std::map<std::vector<int>, std::vector<VertexId>> buckets;
        for (VertexId v : cell) {
            std::vector<std::vector<int>> sig;
            sig.reserve(incidence[static_cast<std::size_t>(v)].size());
            for (std::size_t mi : incidence[static_cast<std::size_t>(v)]) {
                const Simplex& m = maximal[mi];
                std::vector<int> entry;
                entry.reserve(m.size() + 1);
                entry.push_back(m.dim());
                for (VertexId u : m.vertices())
                    if (u != v) entry.push_back(color[static_cast<std::size_t>(u)]);
                std::sort(entry.begin() + 1, entry.end());
                sig.push_back(std::move(entry));
            }
            std::sort(sig.begin(), sig.end());
            std::vector<int> flat;
            for (const auto& e : sig) {
                flat.push_back(-1);  // separator
                flat.insert(flat.end(), e.begin(), e.end());
            }
            buckets[std::move(flat)].push_back(v);
        }
        if (buckets.size() > 1) split_any = true;
        for (auto& [sig, members] : buckets) next.push_back(std::move(members));
    }
    p = std::move(next);
    return split_any;
}

void refine(const SimplicialComplex& k, const std::vector<std::vector<std::size_t>>& incidence,
            Partition& p) {
    while (refine_round(k, incidence, p)) {
    }
}

std::vector<Simplex> encode(const SimplicialComplex& k, const std::vector<int>& label_of) {
    std::vector<Simplex> out;
    out.reserve(k.maximal_simplices().size());
    for (const Simplex& m : k.maximal_simplices()) {
        std::vector<VertexId> verts;
        verts.reserve(m.size());
        for (VertexId v : m.vertices()) verts.push_back(label_of[static_cast<std::size_t>(v)]);
        out.emplace_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void search(SearchContext& ctx, Partition p) {
    refine(*ctx.complex, ctx.incidence, p);
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() > 1) {
            target = c;
            break;
        }
    }
    if (target == p.size()) {
        // Discrete partition: vertex label = cell position.
        std::vector<int> label_of(ctx.complex->vertex_count());
        for (std::size_t c = 0; c < p.size(); ++c)
            label_of[static_cast<std::size_t>(p[c][0])] = static_cast<int>(c);
        std::vector<Simplex> enc = encode(*ctx.complex, label_of);
        if (!ctx.have_best || enc < ctx.best) {
            ctx.best = std::move(enc);
            ctx.best_label_of = std::move(label_of);
            ctx.have_best = true;
        }
        return;
    }
    for (VertexId v : p[target]) {
        Partition child;
        child.reserve(p.size() + 1);
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c != target) {
                child.push_back(p[c]);
                continue;
            }
            child.push_back({v});
            std::vector<VertexId> rest;
            rest.reserve(p[c].size() - 1);
            for (VertexId u : p[c])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
        }
        search(ctx, std::move(child));
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace

CanonicalForm canonicalize(const SimplicialComplex& k_complex) {
    const std::size_t v_count = k_complex.vertex_count();
    CanonicalForm form;
    form.vertex_count = v_count;
    if (v_count == 0) {
        form.digest = hex64(fnv1a("empty"));
        return form;
    }

    // Initial colors: the degree vector over all face dimensions.
    std::map<std::vector<int>, std::vector<VertexId>> initial;
    {
        std::vector<std::vector<int>> deg_vec(v_count);
        for (int k = 0; k <= k_complex.dim(); ++k) {
            std::vector<int> cnt(v_count, 0);
            for (const Simplex& s : k_complex.simplices(k))
                for (VertexId v : s.vertices()) ++cnt[static_cast<std::size_t>(v)];
            for (std::size_t v = 0; v < v_count; ++v) deg_vec[v].push_back(cnt[v]);
        }
        for (std::size_t v = 0; v < v_count; ++v)
            initial[deg_vec[v]].push_back(static_cast<VertexId>(v));
    }
    Partition p;
    for (auto& [key, cell] : initial) p.push_back(std::move(cell));

    SearchContext ctx;
    ctx.complex = &k_complex;
    ctx.incidence.resize(v_count);
    const auto& maximal = k_complex.maximal_simplices();
    for (std::size_t mi = 0; mi < maximal.size(); ++mi)
        for (VertexId v : maximal[mi].vertices())
            ctx.incidence[static_cast<std::size_t>(v)].push_back(mi);

    search(ctx, std::move(p));

    form.maximal = std::move(ctx.best);
    form.permutation.assign(ctx.best_label_of.begin(), ctx.best_label_of.end());

    std::ostringstream os;
    os << "v=" << v_count << ";n=" << k_complex.dim() << ";";
    for (const Simplex& s : form.maximal) os << s.to_string();
    form.digest = hex64(fnv1a(os.str()));
    return form;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.dim() != b.dim()) return false;
    if (a.maximal_simplices().size() != b.maximal_simplices().size()) return false;
    for (int k = 0; k <= a.dim(); ++k)
        if (a.simplices(k).size() != b.simplices(k).size()) return false;
    return canonicalize(a) == canonicalize(b);
}

}  // namespace plink
