#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lenum/geometry.hpp"
#include "lenum/poly.hpp"
#include "lenum/rational.hpp"

namespace lenum {

// Specification of the global vertex order driving the placing triangulation.
// One order is used for a whole run so that shared subfaces of the diagram
// receive identical triangulations.
struct VertexOrder {
    enum class Kind { Lex, Seeded, Explicit };
    Kind kind = Kind::Lex;
    std::uint64_t seed = 0;
    std::vector<ExponentVector> listed;

    static VertexOrder lex() { return {}; }
    static VertexOrder seeded(std::uint64_t s) { return {Kind::Seeded, s, {}}; }
    static VertexOrder from_list(std::vector<ExponentVector> pts) {
        return {Kind::Explicit, 0, std::move(pts)};
    }
};

// Realization of a VertexOrder as a rank map over a concrete vertex set.
// Restrictions of the same map to vertex subsets stay consistent.
class OrderMap {
public:
    OrderMap(const VertexOrder& spec, const std::vector<ExponentVector>& vertices);
    bool less(const ExponentVector& a, const ExponentVector& b) const;

private:
    std::map<ExponentVector, std::size_t> rank_;
};

// Simplex with apex at the origin; `verts` are the non-apex vertices, all
// diagram vertices inside the coordinate subspace `coords`.
struct Simplex {
    std::uint32_t coords = 0;
    std::vector<ExponentVector> verts;  // sorted lexicographically

    bool operator==(const Simplex&) const = default;

    int dim() const { return static_cast<int>(verts.size()); }
    // Axes (bitmask) owning a vertex of this simplex.
    std::uint32_t axis_vertex_mask() const {
        std::uint32_t m = 0;
        for (const auto& v : verts) {
            std::uint32_t s = support_mask(v);
            if ((s & (s - 1)) == 0) m |= s;
        }
        return m;
    }
};

// Placing triangulation of Gamma(f)^I coned to the origin: the set Xi_I.
// Only the maximal simplices of each maximal face are stored; their subfaces
// are implicit.
struct ConeDecomposition {
    int n = 0;
    std::uint32_t coords = 0;
    std::vector<Simplex> simplices;

    bool operator==(const ConeDecomposition&) const = default;
};

// Triangulates the restriction of `diagram` to the index set I (bitmask)
// under the given global order. An empty restriction yields an empty
// decomposition.
ConeDecomposition triangulate_cone(const NewtonDiagram& diagram, std::uint32_t I,
                                   const OrderMap& order);

// |det| / |I|! over the I-coordinates; 0 if the simplex is not of maximal
// dimension |I|.
Rat simplex_volume(const Simplex& S);

// Vol_{|I|}(Gamma_-(f)^I): sum over the maximal-dimension simplices.
Rat cone_volume(const ConeDecomposition& Xi);

// Placing (incremental visibility) triangulation of the vertex set of one
// polytope, given the points in insertion order. Every input point must be a
// vertex of the convex hull of the whole set. Returns maximal simplices as
// index lists into `pts`.
std::vector<std::vector<int>> placing_triangulation(const std::vector<ExponentVector>& pts);

}  // namespace lenum
