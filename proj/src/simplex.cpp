#include "plink/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace plink {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error("empty simplex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error("simplex has a repeated vertex: " + to_string());
    if (vertices_.front() < 0) throw Error("negative vertex id in simplex");
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                         other.vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

std::vector<Simplex> Simplex::faces(int k) const {
    std::vector<Simplex> out;
    if (k < 0 || k > dim()) return out;
    const std::size_t m = static_cast<std::size_t>(k) + 1;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> face(m);
        for (std::size_t i = 0; i < m; ++i) face[i] = vertices_[idx[i]];
        out.emplace_back(std::move(face));
        // next combination
        std::size_t i = m;
        while (i-- > 0) {
            if (idx[i] != i + vertices_.size() - m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<Simplex> Simplex::facets() const { return faces(dim() - 1); }

Simplex Simplex::without(VertexId v) const {
    std::vector<VertexId> rest;
    rest.reserve(vertices_.size() - 1);
    for (VertexId u : vertices_)
        if (u != v) rest.push_back(u);
    if (rest.size() != vertices_.size() - 1)
        throw Error("Simplex::without: vertex not present");
    return Simplex(std::move(rest));
}

Simplex Simplex::with(VertexId v) const {
    if (contains(v)) throw Error("Simplex::with: vertex already present");
    std::vector<VertexId> ext = vertices_;
    ext.push_back(v);
    return Simplex(std::move(ext));
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << "|";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << " ";
        os << vertices_[i];
    }
    os << "|";
    return os.str();
}

}  // namespace plink
