#include "lenum/newton.hpp"

#include <algorithm>
#include <bit>

namespace lenum {

namespace {

Int as_integer(const Rat& q, const char* what) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError(std::string(what) + ": non-integral result");
    return c.get_num();
}

Int signed_factorial(int n, int k) {
    Int f = factorial(k);
    return ((n - k) % 2 == 0) ? f : Int(-f);
}

void check_axes(const Polynomial& f, std::uint32_t J) {
    auto axes = axis_intercepts(f);
    for (int i = 1; i <= f.nvars(); ++i)
        if ((J >> (i - 1)) & 1) {
            if (!axes[i - 1])
                throw InvalidInput("the diagram does not meet axis " + std::to_string(i) +
                                   " required by J");
        }
    if (J >> f.nvars()) throw InvalidInput("J holds an index above the variable count");
}

}  // namespace

Int newton_number_convenient(const Polynomial& f, const VertexOrder& order, bool parallel) {
    auto conv = is_convenient(f);
    if (!conv.convenient) throw InvalidInput("polynomial is not convenient");
    const NewtonDiagram diagram = compact_faces(f);
    const OrderMap omap(order, diagram.vertices());
    const DecompositionFamily fam = build_family(diagram, omap, parallel);

    const int n = f.nvars();
    Rat total = (n % 2 == 0) ? Rat(1) : Rat(-1);  // the empty-set term
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        total += Rat(signed_factorial(n, k)) * cone_volume(fam.at(mask));
    }
    return as_integer(total, "Newton number");
}

NewtonNumber newton_number(const Polynomial& f, const NewtonOptions& opts) {
    NewtonNumber result;
    auto conv = is_convenient(f);
    if (conv.convenient) {
        result.value = newton_number_convenient(f, opts.order, opts.parallel);
        result.convenient_direct = true;
        return result;
    }

    Int m0z = ceil_rat(m_bound(f)) + 1;
    if (m0z < 2) m0z = 2;
    if (!m0z.fits_slong_p()) throw ComputationError("axis exponent overflow");
    std::int64_t m = m0z.get_si();

    bool have_prev = false;
    Int prev = 0;
    for (int step = 0; step <= opts.horizon; ++step, m *= 2) {
        Polynomial::TermMap terms = f.terms();
        for (int i : conv.missing) {
            ExponentVector e(f.nvars(), 0);
            e[i - 1] = m;
            if (!terms.emplace(e, Rat(1)).second)
                throw InternalError("axis collision on a missing axis");
        }
        Int value = newton_number_convenient(Polynomial(f.nvars(), std::move(terms)),
                                             opts.order, opts.parallel);
        result.evidence.emplace_back(m, value);
        if (have_prev) {
            if (value == prev) {
                result.value = value;
                return result;
            }
            if (value < prev)
                throw ComputationError(
                    "Newton numbers decreased along the doubling sequence; no verdict");
        }
        prev = value;
        have_prev = true;
    }
    result.infinite = true;
    return result;
}

SimplexClass classify(const DecompositionFamily& family, std::uint32_t J, int i0,
                      const Polynomial& f) {
    check_axes(f, J);
    SimplexClass cls;
    cls.J = J;
    cls.i0 = i0;
    cls.selected.resize(family.by_mask.size());
    const bool want_none = (i0 == 0);
    if (!want_none && ((J >> (i0 - 1)) & 1) == 0) return cls;  // i0 outside J: empty
    const std::uint32_t i0bit = want_none ? 0 : (1u << (i0 - 1));

    for (std::uint32_t mask = 1; mask < family.by_mask.size(); ++mask) {
        if (!want_none && (mask & i0bit) == 0) continue;  // i0 outside I: empty
        const auto& xi = family.at(mask);
        const int full = std::popcount(mask);
        for (std::size_t s = 0; s < xi.simplices.size(); ++s) {
            const Simplex& sx = xi.simplices[s];
            if (sx.dim() != full) continue;
            const std::uint32_t axes = sx.axis_vertex_mask() & J;
            if (axes == i0bit) cls.selected[mask].push_back(static_cast<std::int32_t>(s));
        }
    }
    return cls;
}

Simplex reduce_simplex(const Simplex& S, int i0) {
    Simplex out = S;
    int found = -1;
    for (std::size_t i = 0; i < out.verts.size(); ++i) {
        if (on_axis(out.verts[i], i0)) {
            if (found >= 0) throw InternalError("simplex owns two vertices on the same axis");
            found = static_cast<int>(i);
        }
    }
    if (found < 0) throw InvalidInput("simplex has no vertex on the reduction axis");
    ExponentVector unit(out.verts[found].size(), 0);
    unit[i0 - 1] = 1;
    out.verts[found] = std::move(unit);
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

Int modified_newton_number(const Polynomial& f, const DecompositionFamily& family,
                           std::uint32_t J, int i0) {
    if (i0 < 1 || i0 > f.nvars()) throw InvalidInput("axis index out of range");
    if (((J >> (i0 - 1)) & 1) == 0) {
        check_axes(f, J);
        return 0;
    }
    const SimplexClass cls = classify(family, J, i0, f);
    const int n = f.nvars();
    Rat total = 0;
    for (std::uint32_t mask = 1; mask < family.by_mask.size(); ++mask) {
        const int k = std::popcount(mask);
        for (auto idx : cls.selected[mask]) {
            const Simplex reduced = reduce_simplex(family.at(mask).simplices[idx], i0);
            total += Rat(signed_factorial(n, k)) * simplex_volume(reduced);
        }
    }
    return as_integer(total, "modified Newton number");
}

Int special_modified_newton_number(const Polynomial& f, const DecompositionFamily& family,
                                   std::uint32_t J) {
    const SimplexClass cls = classify(family, J, 0, f);
    const int n = f.nvars();
    Rat total = 0;
    for (std::uint32_t mask = 1; mask < family.by_mask.size(); ++mask) {
        const int k = std::popcount(mask);
        for (auto idx : cls.selected[mask])
            total += Rat(signed_factorial(n, k)) * simplex_volume(family.at(mask).simplices[idx]);
    }
    return as_integer(total, "special modified Newton number");
}

}  // namespace lenum
