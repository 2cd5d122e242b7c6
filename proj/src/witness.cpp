#include <algorithm>
#include <cmath>
#include <random>

#include "lenum/lenumbers.hpp"

namespace lenum {

namespace {

using C = std::complex<double>;

struct DTerm {
    double c;
    ExponentVector e;
};

// Floating-point image of a face function or of one of its derivatives.
struct DPoly {
    std::vector<DTerm> terms;

    C eval(const std::vector<C>& z) const {
        C acc = 0.0;
        for (const auto& t : terms) {
            C m = t.c;
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::int64_t k = 0; k < t.e[i]; ++k) m *= z[i];
            acc += m;
        }
        return acc;
    }

    // Sum of the monomial magnitudes: the cancellation scale at z. A torus
    // zero of a sum of nonzero monomials can only come from cancellation, so
    // |eval| / mass is the scale-invariant residual.
    double mass(const std::vector<C>& z) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double m = std::abs(t.c);
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::int64_t k = 0; k < t.e[i]; ++k) m *= std::abs(z[i]);
            acc += m;
        }
        return acc;
    }

    DPoly derivative(int var) const {
        DPoly out;
        for (const auto& t : terms) {
            if (t.e[var] == 0) continue;
            DTerm d{t.c * static_cast<double>(t.e[var]), t.e};
            d.e[var] -= 1;
            out.terms.push_back(std::move(d));
        }
        return out;
    }
};

DPoly to_dpoly(const Polynomial& p) {
    DPoly out;
    for (const auto& [e, c] : p.terms())
        out.terms.push_back(DTerm{c.get_d(), e});
    return out;
}

// Partial-pivot LU solve of a (damped) complex system.
bool solve_linear(std::vector<std::vector<C>> a, std::vector<C> b, std::vector<C>& x) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        if (std::abs(a[pivot][c]) < 1e-14) return false;
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            C factor = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
            b[r] -= factor * b[c];
        }
    }
    x.assign(n, C(0));
    for (std::size_t r = n; r-- > 0;) {
        C acc = b[r];
        for (std::size_t j = r + 1; j < n; ++j) acc -= a[r][j] * x[j];
        x[r] = acc / a[r][r];
    }
    return true;
}

double residual_norm(const std::vector<C>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

// Largest cancellation-relative component of the gradient at z.
double relative_residual(const std::vector<DPoly>& grad, const std::vector<C>& z) {
    double worst = 0.0;
    for (const auto& g : grad) {
        if (g.terms.empty()) continue;  // identically zero derivative
        double mass = g.mass(z);
        if (mass <= 0) return HUGE_VAL;
        worst = std::max(worst, std::abs(g.eval(z)) / mass);
    }
    return worst;
}

// One damped-Newton run on the gradient system from a random torus start.
// Returns the end point and its relative residual; the caller applies the
// tolerance.
std::pair<std::vector<C>, double> newton_trial(const std::vector<DPoly>& grad,
                                               const std::vector<std::vector<DPoly>>& hess,
                                               std::mt19937_64& rng) {
    const std::size_t n = grad.size();
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::vector<C> z(n);
    for (auto& zi : z) zi = std::polar(radius(rng), angle(rng));

    std::vector<C> best_z = z;
    double best_res = HUGE_VAL;
    for (int iter = 0; iter < 80; ++iter) {
        std::vector<C> f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = grad[i].eval(z);
        double res = relative_residual(grad, z);
        bool on_torus = std::all_of(z.begin(), z.end(),
                                    [](const C& zi) { return std::abs(zi) > 1e-4; });
        if (on_torus && res < best_res) {
            best_res = res;
            best_z = z;
        }
        if (res < 1e-14) break;

        std::vector<std::vector<C>> j(n, std::vector<C>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) j[i][k] = hess[i][k].eval(z);
        std::vector<C> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = -f[i];
        std::vector<C> delta;
        if (!solve_linear(j, rhs, delta)) {
            for (std::size_t i = 0; i < n; ++i) j[i][i] += 1e-6;
            if (!solve_linear(j, rhs, delta)) break;
        }
        double step = residual_norm(delta);
        if (step > 2.0)
            for (auto& d : delta) d *= 2.0 / step;
        for (std::size_t i = 0; i < n; ++i) z[i] += delta[i];
        bool escaped = std::any_of(z.begin(), z.end(), [](const C& zi) {
            double a = std::abs(zi);
            return a < 1e-6 || a > 1e6;
        });
        if (escaped) break;
    }
    return {best_z, best_res};
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a;
}

}  // namespace

WitnessReport degeneracy_witness_search(const Polynomial& f, const WitnessOptions& opts) {
    WitnessReport rep;
    rep.trials = opts.trials;
    rep.seed = opts.seed;

    const NewtonDiagram dia = compact_faces(f);
    const int n = f.nvars();

    struct Task {
        std::size_t face;
        std::vector<ExponentVector> verts;
        std::vector<DPoly> grad;
        std::vector<std::vector<DPoly>> hess;
    };
    std::vector<Task> tasks;
    for (std::size_t fi = 0; fi < dia.faces().size(); ++fi) {
        const Face& face = dia.faces()[fi];
        ++rep.faces_checked;
        Polynomial fd = face_function(f, face);
        if (fd.term_count() == 1) {
            // partials of a monomial cannot all vanish on the torus
            ++rep.monomial_certified;
            continue;
        }
        Task t;
        t.face = fi;
        for (auto vid : face.verts) t.verts.push_back(dia.vertex(vid));
        DPoly fp = to_dpoly(fd);
        for (int i = 0; i < n; ++i) t.grad.push_back(fp.derivative(i));
        t.hess.resize(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) t.hess[i].push_back(t.grad[i].derivative(k));
        tasks.push_back(std::move(t));
    }

    // Flattened (face, trial) grid with a per-cell seed, so the winner does
    // not depend on the thread count.
    struct Hit {
        std::size_t task;
        int trial;
        DegeneracyWitness w;
    };
    std::vector<std::optional<Hit>> hits(tasks.size() * std::max(opts.trials, 0));
    const std::int64_t cells = static_cast<std::int64_t>(hits.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::size_t ti = cell / opts.trials;
        const int trial = static_cast<int>(cell % opts.trials);
        std::mt19937_64 rng(mix(mix(opts.seed, tasks[ti].face), trial));
        auto [z, res] = newton_trial(tasks[ti].grad, tasks[ti].hess, rng);
        bool on_torus = std::all_of(z.begin(), z.end(),
                                    [](const C& zi) { return std::abs(zi) > 1e-4; });
        if (res < opts.tol && on_torus)
            hits[cell] = Hit{ti, trial, DegeneracyWitness{tasks[ti].verts, z, res}};
    }
    for (const auto& h : hits)
        if (h) {
            rep.witness = h->w;
            break;
        }
    return rep;
}

}  // namespace lenum
