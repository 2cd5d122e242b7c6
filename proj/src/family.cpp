#include "lenum/family.hpp"

#include <exception>
#include <stdexcept>

namespace lenum {

namespace {
void check_subset_count(int n) {
    if (n > 20)
        throw InvalidInput("decomposition families enumerate 2^n coordinate subsets; n = " +
                           std::to_string(n) + " is beyond the supported range");
}
}  // namespace

DecompositionFamily build_family_serial(const NewtonDiagram& diagram, const OrderMap& order) {
    DecompositionFamily fam;
    fam.n = diagram.nvars();
    check_subset_count(fam.n);
    const std::uint32_t total = 1u << fam.n;
    fam.by_mask.resize(total);
    for (std::uint32_t mask = 1; mask < total; ++mask)
        fam.by_mask[mask] = triangulate_cone(diagram, mask, order);
    return fam;
}

DecompositionFamily build_family_parallel(const NewtonDiagram& diagram, const OrderMap& order) {
    DecompositionFamily fam;
    fam.n = diagram.nvars();
    check_subset_count(fam.n);
    const std::uint32_t total = 1u << fam.n;
    fam.by_mask.resize(total);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t mask = 1; mask < static_cast<std::int64_t>(total); ++mask) {
        try {
            fam.by_mask[mask] =
                triangulate_cone(diagram, static_cast<std::uint32_t>(mask), order);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return fam;
}

DecompositionFamily build_family(const NewtonDiagram& diagram, const OrderMap& order,
                                 bool parallel) {
    return parallel ? build_family_parallel(diagram, order)
                    : build_family_serial(diagram, order);
}

}  // namespace lenum
