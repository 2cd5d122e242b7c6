#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lenum/family.hpp"
#include "lenum/geometry.hpp"
#include "lenum/poly.hpp"
#include "lenum/triangulate.hpp"

namespace lenum {

// Newton number: a finite integer or INFINITE (the sup extension diverged
// within the configured horizon). `evidence` records the (m, value) sequence
// of the doubling policy when the sup extension ran.
struct NewtonNumber {
    bool infinite = false;
    Int value = 0;
    bool convenient_direct = false;
    std::vector<std::pair<std::int64_t, Int>> evidence;
};

// Alternating factorial-weighted volume sum over all coordinate subsets,
// including the (-1)^n term for the empty set. Requires f convenient.
Int newton_number_convenient(const Polynomial& f, const VertexOrder& order = {},
                             bool parallel = false);

struct NewtonOptions {
    int horizon = 6;  // doublings of m before declaring divergence
    VertexOrder order;
    bool parallel = false;
};

// Convenient f: evaluates directly. Otherwise evaluates on a doubling
// sequence of axis exponents m; two consecutive equal values stabilize the
// result, strict growth through the horizon yields INFINITE, anything else
// is an error (never a silent guess).
NewtonNumber newton_number(const Polynomial& f, const NewtonOptions& opts = {});

// Per-subset selection Xi_{I,J,i0}. For i0 in J: maximal-dimension simplices
// whose unique J-axis edge lies on axis i0. For i0 = 0: no J-axis edge at
// all. Selections are index lists into family.at(mask).simplices.
struct SimplexClass {
    std::uint32_t J = 0;
    int i0 = 0;
    std::vector<std::vector<std::int32_t>> selected;  // indexed by mask
};

// Requires the diagram of f to meet every axis in J. i0 outside J (and not
// 0) yields an empty classification, matching the defining convention.
SimplexClass classify(const DecompositionFamily& family, std::uint32_t J, int i0,
                      const Polynomial& f);

// Replaces the unique axis-i0 vertex (0,...,a,...,0) by the i0-th unit
// vector; errors if there is none.
Simplex reduce_simplex(const Simplex& S, int i0);

// Definition over reduced simplices of the classes Xi_{I,J,i0}; 0 when i0 is
// not in J.
Int modified_newton_number(const Polynomial& f, const DecompositionFamily& family,
                           std::uint32_t J, int i0);

// Definition over the (unreduced) classes Xi_{I,J,0}.
Int special_modified_newton_number(const Polynomial& f, const DecompositionFamily& family,
                                   std::uint32_t J);

}  // namespace lenum
