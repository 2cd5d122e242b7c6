#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace lenum;
using oracles::P;
using oracles::ev;

namespace {

const char* kWorked = "z1^2*z2^2 + z2^4 + z3^4";        // line singularity along z1
const char* kWorkedAug = "z1^5 + z1^2*z2^2 + z2^4 + z3^4";  // its axis-1 augmentation

std::vector<ExponentVector> face_points(const NewtonDiagram& d, const Face& f) {
    std::vector<ExponentVector> pts;
    for (auto id : f.verts) pts.push_back(d.vertex(id));
    return pts;
}

const Face* find_face(const NewtonDiagram& d, std::vector<ExponentVector> want) {
    std::sort(want.begin(), want.end());
    for (const auto& f : d.faces())
        if (face_points(d, f) == want) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("compact_faces: homogeneous worked example has one maximal triangle") {
    NewtonDiagram d = compact_faces(P(kWorked, 3));
    REQUIRE(d.maximal().size() == 1);
    const Face& top = d.face_at(d.maximal()[0]);
    CHECK(face_points(d, top) ==
          std::vector<ExponentVector>{ev({0, 0, 4}), ev({0, 4, 0}), ev({2, 2, 0})});
    CHECK(top.dim == 2);
    CHECK(top.normal == std::vector<Int>{1, 1, 1});
    CHECK(top.level == Rat(4));
}

TEST_CASE("compact_faces: augmented germ has the two triangles") {
    NewtonDiagram d = compact_faces(P(kWorkedAug, 3));
    REQUIRE(d.maximal().size() == 2);
    std::vector<std::vector<ExponentVector>> tops;
    for (auto id : d.maximal()) tops.push_back(face_points(d, d.face_at(id)));
    std::sort(tops.begin(), tops.end());
    // {A,C,E} and {A,B,C} with A=(2,2,0), B=(0,4,0), C=(0,0,4), E=(5,0,0)
    CHECK(tops[0] ==
          std::vector<ExponentVector>{ev({0, 0, 4}), ev({0, 4, 0}), ev({2, 2, 0})});
    CHECK(tops[1] ==
          std::vector<ExponentVector>{ev({0, 0, 4}), ev({2, 2, 0}), ev({5, 0, 0})});
}

TEST_CASE("compact_faces: single monomial in one variable") {
    NewtonDiagram d = compact_faces(P("z1^7", 1));
    REQUIRE(d.vertices().size() == 1);
    CHECK(d.vertices()[0] == ev({7}));
    REQUIRE(d.faces().size() == 1);
    CHECK(d.faces()[0].dim == 0);
}

TEST_CASE("support_data: worked examples and a derived oracle value") {
    Polynomial f = P(kWorked, 3);
    auto sd = support_data(f, {Rat(1), Rat(1), Rat(1)});
    CHECK(sd.level == Rat(4));
    CHECK(sd.face.verts.size() == 3);  // the whole triangle

    Polynomial g = P("z1^2 + z2^2", 2);
    auto sg = support_data(g, {Rat(1), Rat(2)});
    CHECK(sg.level == Rat(2));
    NewtonDiagram dg = compact_faces(g);
    CHECK(face_points(dg, sg.face) == std::vector<ExponentVector>{ev({2, 0})});

    // Derived by the brute-force oracle: v=(4,3,3) on the augmented germ.
    Polynomial f1 = P(kWorkedAug, 3);
    std::vector<Rat> v{Rat(4), Rat(3), Rat(3)};
    auto oracle = oracles::brute_force_min(f1, v);
    CHECK(oracle.level == Rat(12));
    CHECK(oracle.argmin ==
          std::vector<ExponentVector>{ev({0, 0, 4}), ev({0, 4, 0})});  // {C, B}
    auto sf = support_data(f1, v);
    CHECK(sf.level == oracle.level);
    NewtonDiagram d1 = compact_faces(f1);
    auto pts = face_points(d1, sf.face);
    std::sort(pts.begin(), pts.end());
    CHECK(pts == oracle.argmin);
}

TEST_CASE("restrict: worked examples") {
    NewtonDiagram d1 = compact_faces(P(kWorkedAug, 3));
    NewtonDiagram r12 = d1.restrict_to(0b011);
    REQUIRE(r12.maximal().size() == 2);
    std::vector<std::vector<ExponentVector>> segs;
    for (auto id : r12.maximal()) segs.push_back(face_points(r12, r12.face_at(id)));
    std::sort(segs.begin(), segs.end());
    CHECK(segs[0] == std::vector<ExponentVector>{ev({0, 4, 0}), ev({2, 2, 0})});  // [A,B]
    CHECK(segs[1] == std::vector<ExponentVector>{ev({2, 2, 0}), ev({5, 0, 0})});  // [E,A]

    NewtonDiagram d = compact_faces(P(kWorked, 3));
    CHECK(d.restrict_to(0b001).empty());  // no support on the x1 axis

    CHECK(d.restrict_to(d.coords()).same_faces(d));  // identity restriction
}

TEST_CASE("is_convenient") {
    auto c1 = is_convenient(P(kWorked, 3));
    CHECK_FALSE(c1.convenient);
    CHECK(c1.missing == std::set<int>{1});

    auto c2 = is_convenient(P(kWorkedAug, 3));
    CHECK(c2.convenient);

    auto c3 = is_convenient(P("z1*z2", 2));
    CHECK_FALSE(c3.convenient);
    CHECK(c3.missing == std::set<int>{1, 2});
}

TEST_CASE("m_bound: forced homogeneous value and derived cases") {
    CHECK(m_bound(P(kWorked, 3)) == Rat(4));
    CHECK(m_bound(P("z1^6 + z2^6", 2)) == Rat(6));
    // single vertex (0,2): witness normal is the primitive facet-normal sum (1,1)
    NewtonDiagram d = compact_faces(P("z2^2", 2));
    REQUIRE(d.maximal().size() == 1);
    const Face& top = d.face_at(d.maximal()[0]);
    CHECK(top.normal == std::vector<Int>{1, 1});
    CHECK(m_bound(d) == Rat(2));
}

TEST_CASE("face_function") {
    Polynomial f = P(kWorked, 3);
    NewtonDiagram d = compact_faces(f);
    CHECK(face_function(f, d.face_at(d.maximal()[0])) == f);  // homogeneous: everything

    Polynomial f1 = P(kWorkedAug, 3);
    NewtonDiagram d1 = compact_faces(f1);
    const Face* ae = find_face(d1, {ev({2, 2, 0}), ev({5, 0, 0})});
    REQUIRE(ae != nullptr);
    CHECK(face_function(f1, *ae) == P("z1^5 + z1^2*z2^2", 3));

    const Face* vertex = find_face(d1, {ev({0, 0, 4})});
    REQUIRE(vertex != nullptr);
    CHECK(face_function(f1, *vertex) == P("z3^4", 3));

    CHECK_THROWS_AS(face_function(P("z1^2", 1), d1.face_at(0)), InvalidInput);
}

TEST_CASE("property: geometry invariants on random germs") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        Polynomial f = oracles::random_germ(n, 12, 9, rng);
        NewtonDiagram d = compact_faces(f);

        // diagram vertices are support points
        auto supp = f.support();
        for (const auto& v : d.vertices())
            CHECK(std::find(supp.begin(), supp.end(), v) != supp.end());

        // every support point lies on or above every face's witness hyperplane
        for (const auto& face : d.faces()) {
            for (const auto& b : supp) {
                Rat s = 0;
                for (int i = 0; i < n; ++i) s += Rat(face.normal[i]) * Rat(b[i]);
                CHECK(s >= face.level);
            }
            // witness normal is strictly positive and attains the level on the face
            for (int i = 0; i < n; ++i) CHECK(face.normal[i] > 0);
            for (auto id : face.verts) {
                Rat s = 0;
                for (int i = 0; i < n; ++i) s += Rat(face.normal[i]) * Rat(d.vertex(id)[i]);
                CHECK(s == face.level);
            }
        }

        // face lattice: the 0-dimensional subfaces of a face are exactly its vertices
        for (const auto& face : d.faces()) {
            std::vector<std::int32_t> zero_dim;
            for (const auto& sub : d.faces()) {
                if (sub.dim != 0) continue;
                if (std::includes(face.verts.begin(), face.verts.end(), sub.verts.begin(),
                                  sub.verts.end()))
                    zero_dim.push_back(sub.verts[0]);
            }
            std::sort(zero_dim.begin(), zero_dim.end());
            CHECK(zero_dim == face.verts);
        }

        // restriction to everything is the identity
        CHECK(d.restrict_to(d.coords()).same_faces(d));

        // m_bound dominates every axis intercept
        Rat m = m_bound(d);
        auto axes = axis_intercepts(f);
        for (int i = 0; i < n; ++i)
            if (axes[i]) CHECK(m >= Rat(*axes[i]));

        // determinism: a second build gives the identical diagram
        CHECK(d.same_faces(compact_faces(f)));
    }
}
