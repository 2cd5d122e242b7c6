#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lenum/poly.hpp"
#include "lenum/rational.hpp"

namespace lenum {

// Supporting halfspace <v,x> >= level of the Newton polyhedron. Normals are
// primitive integer vectors with non-negative entries.
struct Halfspace {
    std::vector<Int> normal;
    Int level;
};

// Compact face of the Newton polyhedron, carrying one strictly positive
// witness normal (the primitive sum of the normals of the facets containing
// the face) and its level.
struct Face {
    std::vector<std::int32_t> verts;  // indices into NewtonDiagram::vertices(), ascending
    int dim = 0;
    std::vector<Int> normal;
    Rat level;
};

// The set of compact faces of conv(supp f) + R+^n, closed under subfaces.
// A restriction to a coordinate subspace is the same structure with a
// narrower coordinate mask; faces then live in that subspace.
class NewtonDiagram {
public:
    static NewtonDiagram build(std::vector<ExponentVector> supp, int n);

    int nvars() const { return n_; }
    std::uint32_t coords() const { return coords_; }
    bool empty() const { return faces_.empty(); }

    const std::vector<ExponentVector>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<std::int32_t>& maximal() const { return maximal_; }

    const Face& face_at(std::int32_t id) const { return faces_[id]; }
    ExponentVector vertex(std::int32_t id) const { return vertices_[id]; }

    // Faces contained in the coordinate subspace {x_i = 0 : bit i-1 not in mask}.
    NewtonDiagram restrict_to(std::uint32_t mask) const;

    // Wether some compact face touches the i-th coordinate axis (1-based).
    bool meets_axis(int i) const;

    // Equality of the underlying face complexes (vertex sets per face).
    bool same_faces(const NewtonDiagram& other) const;

private:
    int n_ = 0;
    std::uint32_t coords_ = 0;
    std::vector<ExponentVector> vertices_;
    std::vector<Face> faces_;
    std::vector<std::int32_t> maximal_;
};

NewtonDiagram compact_faces(const Polynomial& f);

// Facet description of conv(supp) + R+^n by incremental double description
// over exact integers. Deterministic: output sorted lexicographically.
std::vector<Halfspace> newton_facets(const std::vector<ExponentVector>& supp, int n);

struct SupportData {
    Rat level;
    Face face;
};

// Minimum of <v,.> over the support and the diagram face where it is attained.
SupportData support_data(const Polynomial& f, const NewtonDiagram& diagram,
                         const std::vector<Rat>& v);
SupportData support_data(const Polynomial& f, const std::vector<Rat>& v);

// Per axis i, the smallest a with a*e_i in the diagram (from axis terms of f).
std::vector<std::optional<std::int64_t>> axis_intercepts(const Polynomial& f);

struct Convenience {
    bool convenient = false;
    std::set<int> missing;  // axes the diagram does not meet (1-based)
};
Convenience is_convenient(const Polynomial& f);

// Axis-intercept bound from the witness normals of the maximal faces: any
// integer exponent strictly above it preserves non-degeneracy when an axis
// power is added.
Rat m_bound(const NewtonDiagram& diagram);
Rat m_bound(const Polynomial& f);

// Sub-polynomial supported on the face.
Polynomial face_function(const Polynomial& f, const Face& face);

}  // namespace lenum
