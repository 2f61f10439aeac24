#ifndef PLINK_SIMPLEX_HPP
#define PLINK_SIMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "plink/errors.hpp"

namespace plink {

// Vertices are dense indices into a complex's label table.
using VertexId = int;

// An abstract simplex: strictly increasing, nonempty vertex list.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const;
    bool contains_all(const Simplex& other) const;  // other is a face of this
    bool disjoint_from(const Simplex& other) const;

    // All faces of dimension k (k <= dim), in lexicographic order.
    std::vector<Simplex> faces(int k) const;

    // The dim-1 faces in lexicographic order; for a 0-simplex, empty.
    std::vector<Simplex> facets() const;

    // Face with vertex v removed (v must be present).
    Simplex without(VertexId v) const;

    // Face extended by vertex v (v must be absent).
    Simplex with(VertexId v) const;

    std::string to_string() const;

    friend bool operator==(const Simplex& a, const Simplex& b) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (VertexId v : s.vertices()) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b9ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace plink

#endif  // PLINK_SIMPLEX_HPP
