#pragma once

#include <cstdint>
#include <vector>

#include "lenum/geometry.hpp"
#include "lenum/triangulate.hpp"

namespace lenum {

// The collection Xi = {Xi_I} over all non-empty coordinate subsets I,
// indexed by bitmask. by_mask[0] stays empty.
struct DecompositionFamily {
    int n = 0;
    std::vector<ConeDecomposition> by_mask;

    const ConeDecomposition& at(std::uint32_t mask) const { return by_mask[mask]; }
};

// Serial reference implementation.
DecompositionFamily build_family_serial(const NewtonDiagram& diagram, const OrderMap& order);

// OpenMP kernel: the subsets are independent, so the loop over masks is a
// plain parallel for; outputs are written to disjoint slots and are identical
// to the serial reference.
DecompositionFamily build_family_parallel(const NewtonDiagram& diagram, const OrderMap& order);

DecompositionFamily build_family(const NewtonDiagram& diagram, const OrderMap& order,
                                 bool parallel);

}  // namespace lenum
