#include "plink/deltay.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "plink/constructions.hpp"
#include "plink/rng.hpp"

namespace plink {

std::vector<VertexId> ExchangeRecord::tetra_vertices() const {
    std::set<VertexId> vs;
    for (const Simplex& s : removed) vs.insert(s.vertices().begin(), s.vertices().end());
    return {vs.begin(), vs.end()};
}

namespace {

std::string fresh_x_label(const std::vector<std::string>& labels) {
    int best = 0;
    for (const std::string& l : labels) {
        if (l.size() > 1 && l[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < l.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(l[i]))) digits = false;
            if (digits) best = std::max(best, std::stoi(l.substr(1)));
        }
    }
    return "x" + std::to_string(best + 1);
}

}  // namespace

std::pair<SimplicialComplex, ExchangeRecord> apply_delta_y(const SimplicialComplex& k_complex,
                                                           const SphereSubcomplex& tetra) {
    const int n = k_complex.dim();
    std::vector<VertexId> support;
    {
        std::set<VertexId> vs;
        for (const Simplex& s : tetra.simplices()) vs.insert(s.vertices().begin(), s.vertices().end());
        support.assign(vs.begin(), vs.end());
    }
    if (support.size() != static_cast<std::size_t>(n) + 2)
        throw NotATetrahedron("expected a vertex support of size n+2");
    Simplex full((std::vector<VertexId>(support)));
    std::vector<Simplex> facets = full.facets();
    {
        std::vector<Simplex> got = tetra.simplices();
        std::sort(got.begin(), got.end());
        if (got != facets) throw NotATetrahedron("simplices are not the facets of " + full.to_string());
    }
    for (const Simplex& f : facets)
        if (!k_complex.has_simplex(f))
            throw NotATetrahedron("facet " + f.to_string() + " missing from the complex");

    std::vector<std::string> labels = k_complex.labels();
    const VertexId x = static_cast<VertexId>(labels.size());
    labels.push_back(fresh_x_label(labels));

    ExchangeRecord rec;
    rec.source_name = k_complex.name();
    rec.removed = facets;
    rec.added_vertex = x;
    for (const Simplex& rho : full.faces(n - 1)) rec.added.push_back(rho.with(x));

    std::unordered_set<Simplex, SimplexHash> removed_set(facets.begin(), facets.end());
    std::vector<Simplex> maximal;
    for (const Simplex& m : k_complex.maximal_simplices())
        if (!removed_set.count(m)) maximal.push_back(m);
    maximal.insert(maximal.end(), rec.added.begin(), rec.added.end());

    SimplicialComplex out = SimplicialComplex::closure(
        std::move(labels), std::move(maximal), k_complex.name() + "/dy");
    return {std::move(out), std::move(rec)};
}

TransportResult transport_sphere(const SphereSubcomplex& gamma, const ExchangeRecord& rec) {
    std::vector<Simplex> used;
    std::vector<Simplex> kept;
    {
        std::unordered_set<Simplex, SimplexHash> removed_set(rec.removed.begin(),
                                                             rec.removed.end());
        for (const Simplex& s : gamma.simplices()) {
            if (removed_set.count(s))
                used.push_back(s);
            else
                kept.push_back(s);
        }
    }
    if (used.empty()) return gamma;
    if (used.size() == rec.removed.size()) {
        if (!kept.empty())
            throw TransportBroken("sphere strictly contains the exchanged tetrahedron");
        return Dropped{};
    }

    // Mod-2 boundary of the union of used faces: (n-1)-faces occurring
    // an odd number of times, each rerouted through x.
    std::map<Simplex, int> boundary_count;
    for (const Simplex& f : used)
        for (const Simplex& rho : f.facets()) ++boundary_count[rho];
    std::vector<Simplex> result = std::move(kept);
    for (const auto& [rho, count] : boundary_count)
        if (count % 2 == 1) result.push_back(rho.with(rec.added_vertex));

    SphereSubcomplex transported(std::move(result), SphereKind::Transported);
    if (!is_z2_sphere(transported.simplices()))
        throw TransportBroken("transported sphere failed Z2-sphere validation: " +
                              transported.to_string());
    return transported;
}

PairFamily transport_family(const PairFamily& family, const ExchangeRecord& rec,
                            const SimplicialComplex& target) {
    std::vector<SpherePair> pairs;
    for (const SpherePair& pair : family.pairs) {
        TransportResult a = transport_sphere(pair.first(), rec);
        TransportResult b = transport_sphere(pair.second(), rec);
        if (std::holds_alternative<Dropped>(a) || std::holds_alternative<Dropped>(b)) continue;
        SphereSubcomplex ta = std::get<SphereSubcomplex>(std::move(a));
        SphereSubcomplex tb = std::get<SphereSubcomplex>(std::move(b));
        if (!ta.disjoint_from(tb))
            throw TransportBroken("transported pair components are no longer disjoint");
        for (const SphereSubcomplex* s : {&ta, &tb})
            for (const Simplex& simplex : s->simplices())
                if (!target.has_simplex(simplex))
                    throw TransportBroken("transported sphere leaves the target complex at " +
                                          simplex.to_string());
        pairs.emplace_back(std::move(ta), std::move(tb));
    }
    return make_family(target, std::move(pairs), EnumerationMode::Transported);
}

SimplicialComplex build_P(int n) { return build_P_ordered(n, 0); }

SimplicialComplex build_P_ordered(int n, std::uint64_t seed) {
    auto [k, fx] = build_K(n);
    std::vector<SphereSubcomplex> tetras = gamma_xi_tetrahedra(n);
    if (seed != 0) {
        SeededRng rng(seed);
        rng.shuffle(tetras);
    }
    SimplicialComplex current = k;
    for (const SphereSubcomplex& t : tetras) {
        auto [next, rec] = apply_delta_y(current, t);
        current = std::move(next);
    }
    return current.renamed("P^(" + std::to_string(n) + ")");
}

FamilySearchResult family_search(const SimplicialComplex& k_complex, std::size_t max_nodes) {
    FamilySearchResult result;
    std::set<std::string> seen;

    std::deque<FamilyNode> queue;
    {
        FamilyNode root;
        root.complex = k_complex;
        root.digest = canonicalize(k_complex).digest;
        seen.insert(root.digest);
        queue.push_back(std::move(root));
    }
    while (!queue.empty()) {
        FamilyNode node = std::move(queue.front());
        queue.pop_front();
        std::vector<SphereSubcomplex> tetras = find_tetrahedra(node.complex);
        result.nodes.push_back(node);
        for (const SphereSubcomplex& t : tetras) {
            auto [next, rec] = apply_delta_y(node.complex, t);
            std::string digest = canonicalize(next).digest;
            if (seen.count(digest)) continue;
            if (seen.size() >= max_nodes) {
                result.truncated = true;
                continue;
            }
            seen.insert(digest);
            FamilyNode child;
            child.complex = std::move(next);
            child.digest = std::move(digest);
            child.parent_digest = node.digest;
            child.exchange = rec;
            queue.push_back(std::move(child));
        }
    }
    return result;
}

bool check_degree_equation(const SimplicialComplex& before, const SimplicialComplex& after,
                           const ExchangeRecord& rec, std::string* message) {
    const int n = before.dim();
    if (n < 2) {
        if (message) *message = "Eq.(deg) applies for n >= 2";
        return false;
    }
    // (n-1)-skeleton of the source must be a subcomplex of the target.
    for (const Simplex& s : before.simplices(n - 1)) {
        if (!after.has_simplex(s)) {
            if (message) *message = "(n-1)-skeleton not preserved at " + s.to_string();
            return false;
        }
    }
    for (const Simplex& s : before.simplices(n - 2)) {
        if (after.degree(s) != before.degree(s)) {
            if (message)
                *message = "degree changed at " + s.to_string() + ": " +
                           std::to_string(before.degree(s)) + " -> " +
                           std::to_string(after.degree(s));
            return false;
        }
    }
    for (const Simplex& s : after.simplices(n - 2)) {
        if (s.contains(rec.added_vertex) && after.degree(s) != 6) {
            if (message)
                *message = "x-simplex " + s.to_string() + " has degree " +
                           std::to_string(after.degree(s)) + ", expected 6";
            return false;
        }
    }
    return true;
}

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace

DisjointnessCertificate hdpet_certificate(int n) {
    if (n < 2) throw DimensionOutOfRange("hdpet_certificate: need n >= 2");
    DisjointnessCertificate cert;
    cert.n = n;
    cert.sigma_degree = binomial(n + 5, 2);
    cert.k_degrees = {Int(27), Int(15)};
    cert.inequality_holds =
        cert.sigma_degree != cert.k_degrees[0] && cert.sigma_degree != cert.k_degrees[1];

    std::ostringstream detail;
    detail << "C(n+5,2)=" << cert.sigma_degree << " vs {27,15}";

    // Exhaustive degree-multiset enumeration stays cheap through n = 3;
    // beyond that the formula values are verified on representative
    // (n-2)-simplices only.
    if (n <= 3) {
        SimplicialComplex sigma = sigma_skeleton(2 * n + 3, n);
        for (const Simplex& tau : sigma.simplices(n - 2)) {
            if (Int(sigma.degree(tau)) != cert.sigma_degree) {
                cert.inequality_holds = false;
                detail << "; sigma degree mismatch at " << tau.to_string();
                cert.detail = detail.str();
                return cert;
            }
        }
        auto [k, fx] = build_K(n);
        for (const Simplex& tau : k.simplices(n - 2)) {
            int want = tau.contains(fx.apex) ? 27 : 15;
            if (k.degree(tau) != want) {
                cert.inequality_holds = false;
                detail << "; K degree mismatch at " << tau.to_string();
                cert.detail = detail.str();
                return cert;
            }
        }
        cert.degrees_enumerated = true;
        detail << "; degree multisets enumerated exhaustively";
    } else {
        auto [k, fx] = build_K(n);
        // Representative (n-2)-simplices: with and without the apex.
        std::vector<VertexId> with_b = {fx.apex};
        std::vector<VertexId> without_b;
        for (int i = 0; i + 1 <= n - 2; ++i) with_b.push_back(fx.factor_point(i, 0));
        for (int i = 0; i <= n - 2; ++i) without_b.push_back(fx.factor_point(i, i % 3));
        for (auto& [verts, want] :
             std::vector<std::pair<std::vector<VertexId>, int>>{{with_b, 27}, {without_b, 15}}) {
            Simplex tau((std::vector<VertexId>(verts)));
            if (k.degree(tau) != want) {
                cert.inequality_holds = false;
                detail << "; K degree spot-check failed at " << tau.to_string();
                cert.detail = detail.str();
                return cert;
            }
        }
        detail << "; degree values spot-checked on representatives";
    }

    // Eq.(deg) preservation on sampled exchanges.
    if (n <= 3) {
        auto [k, fx] = build_K(n);
        std::vector<SphereSubcomplex> tetras = find_tetrahedra(k);
        SeededRng rng(20240 + static_cast<std::uint64_t>(n));
        int checked = 0;
        for (int trial = 0; trial < 5 && !tetras.empty(); ++trial) {
            const SphereSubcomplex& t =
                tetras[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(tetras.size()) - 1))];
            auto [after, rec] = apply_delta_y(k, t);
            std::string msg;
            if (!check_degree_equation(k, after, rec, &msg)) {
                cert.inequality_holds = false;
                detail << "; Eq.(deg) failed: " << msg;
                cert.detail = detail.str();
                return cert;
            }
            ++checked;
        }
        cert.eqdeg_checked = checked > 0;
        detail << "; Eq.(deg) verified on " << checked << " sampled exchanges";
    }
    cert.detail = detail.str();
    return cert;
}

}  // namespace plink
