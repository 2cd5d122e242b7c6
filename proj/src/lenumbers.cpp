#include "lenum/lenumbers.hpp"

#include <algorithm>

namespace lenum {

namespace {

std::int64_t to_i64(const Int& z, const char* what) {
    if (!z.fits_slong_p()) throw ComputationError(std::string(what) + " overflow");
    return z.get_si();
}

std::int64_t alpha_rule(const Rat& bound, std::optional<std::int64_t> degree_shortcut,
                        std::int64_t at_least) {
    Int a = ceil_rat(bound) + 1;
    if (a < 3) a = 3;
    if (degree_shortcut && a <= *degree_shortcut) a = *degree_shortcut + 1;
    if (a < at_least) a = at_least;
    return to_i64(a, "axis exponent");
}

void lemma_gate(const Polynomial& f, int d) {
    auto bad = pure_power_indices(f, d);
    if (!bad.empty()) {
        std::string list;
        for (int i : bad) list += (list.empty() ? "z" : ", z") + std::to_string(i);
        throw InvalidInput(
            "pure power term(s) of " + list + " present: a germ whose first " +
            std::to_string(d) +
            " coordinates are augmented must have no such term, otherwise the Le-number "
            "hypotheses cannot all hold");
    }
}

struct RunData {
    std::vector<Int> lambdas;
    Int nu0;
    std::vector<Int> nutilde;
};

RunData lambda_run(const Polynomial& f, int d, const std::vector<std::int64_t>& alphas,
                   const PipelineOptions& opts) {
    auto aug = augment(f, alphas);
    if (!aug.collisions.empty())
        throw InternalError("axis collision after the pure-power gate");
    const Polynomial& fd = aug.poly;

    const NewtonDiagram diagram = compact_faces(fd);
    const OrderMap omap(opts.order, diagram.vertices());
    const DecompositionFamily fam = build_family(diagram, omap, opts.parallel);
    const std::uint32_t J = (1u << d) - 1;

    RunData run;
    run.nu0 = special_modified_newton_number(fd, fam, J);
    for (int k = 1; k <= d; ++k)
        run.nutilde.push_back(modified_newton_number(fd, fam, J, k));

    const int n = f.nvars();
    run.lambdas.resize(d + 1);
    run.lambdas[0] = Int((n % 2 == 0) ? 1 : -1) + run.nu0 + run.nutilde[0];
    for (int k = 1; k <= d - 1; ++k) {
        Int diff = run.nutilde[k - 1] - run.nutilde[k];
        run.lambdas[k] = ((k - 1) % 2 == 0) ? diff : Int(-diff);
    }
    run.lambdas[d] = ((d - 1) % 2 == 0) ? run.nutilde[d - 1] : Int(-run.nutilde[d - 1]);
    return run;
}

}  // namespace

std::vector<std::int64_t> ExponentPlan::alphas() const {
    std::vector<std::int64_t> v;
    for (const auto& s : base) v.push_back(s.alpha);
    return v;
}

std::vector<std::int64_t> ExponentPlan::boosted_alphas() const {
    std::vector<std::int64_t> v;
    for (const auto& s : boosted) v.push_back(s.alpha);
    return v;
}

ExponentPlan choose_exponents(const Polynomial& f, int d) {
    if (d < 1) throw InvalidInput("d must be >= 1");
    if (d > f.nvars()) throw InvalidInput("d exceeds the variable count");
    lemma_gate(f, d);

    std::optional<std::int64_t> shortcut;
    if (f.is_homogeneous()) shortcut = f.degree();

    ExponentPlan plan;
    plan.d = d;
    {
        Polynomial cur = f;
        for (int p = 1; p <= d; ++p) {
            Rat bound = m_bound(cur);
            plan.base.push_back(AlphaStep{alpha_rule(bound, shortcut, 0), bound, shortcut});
            cur = augment(f, plan.alphas()).poly;
        }
    }
    {
        Polynomial cur = f;
        for (int p = 1; p <= d; ++p) {
            Rat bound = m_bound(cur);
            plan.boosted.push_back(
                AlphaStep{alpha_rule(bound, shortcut, 2 * plan.base[p - 1].alpha), bound,
                          shortcut});
            cur = augment(f, plan.boosted_alphas()).poly;
        }
    }
    return plan;
}

ExponentPlan plan_from_alphas(const Polynomial& f, const std::vector<std::int64_t>& alphas) {
    const int d = static_cast<int>(alphas.size());
    if (d < 1) throw InvalidInput("at least one exponent required");
    if (d > f.nvars()) throw InvalidInput("more exponents than variables");
    lemma_gate(f, d);

    std::optional<std::int64_t> shortcut;
    if (f.is_homogeneous()) shortcut = f.degree();

    ExponentPlan plan;
    plan.d = d;
    Polynomial cur = f;
    for (int p = 1; p <= d; ++p) {
        Rat bound = m_bound(cur);
        Int threshold = ceil_rat(bound);
        if (threshold < 2) threshold = 2;
        if (alphas[p - 1] <= threshold)
            throw InvalidInput("alpha_" + std::to_string(p) + " = " +
                               std::to_string(alphas[p - 1]) +
                               " does not exceed max{2, " + to_string(bound) + "}");
        plan.base.push_back(AlphaStep{alphas[p - 1], bound, std::nullopt});
        cur = augment(f, std::vector<std::int64_t>(alphas.begin(), alphas.begin() + p)).poly;
    }
    cur = f;
    for (int p = 1; p <= d; ++p) {
        Rat bound = m_bound(cur);
        AlphaStep step{alpha_rule(bound, shortcut, 2 * plan.base[p - 1].alpha), bound, shortcut};
        plan.boosted.push_back(step);
        std::vector<std::int64_t> sofar = plan.boosted_alphas();
        cur = augment(f, sofar).poly;
    }
    return plan;
}

bool LeResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

EstimateResult estimate_critical_dimension(const Polynomial& f, const PipelineOptions& opts) {
    EstimateResult res;
    // Probe exponent above every support exponent so no term collides.
    Int probe = ceil_rat(m_bound(f)) + 1;
    if (probe <= f.degree()) probe = f.degree() + 1;
    if (probe < 2) probe = 2;
    res.probe_exponent = to_i64(probe, "probe exponent");

    NewtonOptions nopts{opts.horizon, opts.order, opts.parallel};
    for (int q = 0; q <= f.nvars(); ++q) {
        Polynomial g = q == 0
                           ? f
                           : augment(f, std::vector<std::int64_t>(q, res.probe_exponent)).poly;
        NewtonNumber nu = newton_number(g, nopts);
        res.probes.emplace_back(q, !nu.infinite);
        if (!nu.infinite) {
            res.d = q;
            return res;
        }
    }
    throw ComputationError("critical-dimension probe exhausted without a finite Newton number");
}

LeResult le_numbers(const Polynomial& f, int d, const ExponentPlan& plan,
                    const PipelineOptions& opts) {
    const int n = f.nvars();
    if (d < 1) throw InvalidInput("d must be >= 1");
    if (d > n - 1)
        throw InvalidInput("d exceeds n-1: Le numbers vanish above the critical dimension");
    if (plan.d != d) throw InvalidInput("plan was built for a different d");
    lemma_gate(f, d);

    const RunData base = lambda_run(f, d, plan.alphas(), opts);
    const RunData boosted = lambda_run(f, d, plan.boosted_alphas(), opts);

    LeResult r;
    r.n = n;
    r.d = d;
    r.alphas = plan.alphas();
    r.boosted_alphas = plan.boosted_alphas();
    r.lambdas = base.lambdas;
    r.nu0 = base.nu0;
    r.nutilde = base.nutilde;
    r.prepolar_asserted = opts.prepolar_asserted;

    if (base.lambdas != boosted.lambdas) {
        std::string msg = "Le numbers changed when all axis exponents were raised (";
        for (int k = 0; k <= d; ++k)
            msg += to_string(base.lambdas[k]) + (k < d ? "," : " vs ");
        for (int k = 0; k <= d; ++k)
            msg += to_string(boosted.lambdas[k]) + (k < d ? "," : ")");
        throw ComputationError(msg + "; pick larger exponents");
    }
    r.checks.push_back(
        {"stabilization", true, "identical Le numbers under the boosted exponent plan"});

    for (int k = 0; k <= d; ++k)
        if (r.lambdas[k] < 0)
            throw ComputationError(
                "negative Le number lambda^" + std::to_string(k) + " = " +
                to_string(r.lambdas[k]) +
                ": the hypotheses are violated for these coordinates (Le numbers may be "
                "undefined)");

    // Telescoping identity: nutilde_1 = sum_{k>=1} (-1)^{k-1} lambda^k.
    {
        Int acc = 0;
        for (int k = 1; k <= d; ++k)
            acc += ((k - 1) % 2 == 0) ? r.lambdas[k] : Int(-r.lambdas[k]);
        bool ok = acc == r.nutilde[0];
        r.checks.push_back({"telescoping", ok,
                            "nutilde_1 = " + to_string(r.nutilde[0]) +
                                ", alternating lambda sum = " + to_string(acc)});
        if (!ok) throw InternalError("telescoping identity failed");
    }

    {
        std::vector<std::int64_t> alphas = plan.alphas();
        Int mu = r.lambdas[0];
        Int prod = 1;
        for (int k = 1; k <= d; ++k) {
            prod *= Int(alphas[k - 1] - 1);
            mu += prod * r.lambdas[k];
        }
        r.mu_fd = mu;
        NewtonOptions nopts{opts.horizon, opts.order, opts.parallel};
        NewtonNumber nu = newton_number(augment(f, alphas).poly, nopts);
        if (nu.infinite) throw ComputationError("Newton number of f_d diverged");
        r.nu_fd = nu.value;
        bool ok = (r.mu_fd == r.nu_fd);
        r.checks.push_back({"milnor-reconstruction", ok,
                            "lambda reconstruction gives " + to_string(r.mu_fd) +
                                ", Newton number of f_d gives " + to_string(r.nu_fd)});
    }

    r.euler = euler_characteristic(r);
    r.checks.push_back({"euler-two-routes", true,
                        "special-number formula and alternating lambda sum agree: " +
                            to_string(r.euler)});
    return r;
}

Int euler_characteristic(const LeResult& r) {
    Int inner = r.nu0 + Int((r.n % 2 == 0) ? 1 : -1);
    Int via_nu0 = ((r.n - 1) % 2 == 0) ? inner : Int(-inner);
    Int via_lambda = 0;
    for (int k = 0; k <= r.d; ++k) {
        Int term = r.lambdas[k];
        via_lambda += ((r.n - 1 - k) % 2 == 0) ? term : Int(-term);
    }
    if (via_nu0 != via_lambda)
        throw InternalError("Euler characteristic routes disagree: " + to_string(via_nu0) +
                            " vs " + to_string(via_lambda));
    return via_nu0;
}

std::vector<Check> consistency_check(const Polynomial& f, const ExponentPlan& plan,
                                     const LeResult& r, const PipelineOptions& opts) {
    std::vector<Check> checks;
    std::vector<std::int64_t> alphas = plan.alphas();
    Int mu = r.lambdas.at(0);
    Int prod = 1;
    for (int k = 1; k <= plan.d; ++k) {
        prod *= Int(alphas[k - 1] - 1);
        mu += prod * r.lambdas.at(k);
    }
    NewtonOptions nopts{opts.horizon, opts.order, opts.parallel};
    NewtonNumber nu = newton_number(augment(f, alphas).poly, nopts);
    if (nu.infinite) {
        checks.push_back({"milnor-reconstruction", false,
                          "Newton number of f_d diverged; expected the finite value " +
                              to_string(mu)});
        return checks;
    }
    bool ok = (mu == nu.value);
    checks.push_back({"milnor-reconstruction", ok,
                      "lambda reconstruction gives " + to_string(mu) +
                          ", Newton number of f_d gives " + to_string(nu.value)});
    return checks;
}

CompareReport compare(const Polynomial& f, const Polynomial& g, const CompareOptions& opts) {
    if (f.nvars() != g.nvars())
        throw InvalidInput("polynomials live in different variable counts");
    CompareReport rep;
    const NewtonDiagram df = compact_faces(f);
    const NewtonDiagram dg = compact_faces(g);
    rep.diagrams_equal = df.same_faces(dg);

    auto run = [&](const Polynomial& p, std::optional<int>& d_out, std::vector<Int>& lambda_out,
                   std::optional<std::string>& err_out, std::optional<WitnessReport>& wit_out) {
        try {
            if (opts.run_witness) wit_out = degeneracy_witness_search(p, opts.witness);
            int d = opts.d ? *opts.d
                           : estimate_critical_dimension(p, opts.pipeline).d;
            d_out = d;
            if (d == 0) {
                NewtonOptions nopts{opts.pipeline.horizon, opts.pipeline.order,
                                    opts.pipeline.parallel};
                NewtonNumber nu = newton_number(p, nopts);
                if (nu.infinite) throw ComputationError("isolated probe diverged");
                lambda_out = {nu.value};  // lambda^0 = Milnor number
                return;
            }
            LeResult lr = le_numbers(p, d, choose_exponents(p, d), opts.pipeline);
            lambda_out = lr.lambdas;
        } catch (const std::exception& e) {
            err_out = e.what();
        }
    };
    run(f, rep.d_f, rep.lambda_f, rep.error_f, rep.witness_f);
    run(g, rep.d_g, rep.lambda_g, rep.error_g, rep.witness_g);

    if (!rep.diagrams_equal) {
        rep.verdict = "DIAGRAMS_DIFFER";
    } else if (rep.error_f || rep.error_g) {
        rep.verdict = "ERROR";
    } else {
        rep.verdict = (rep.d_f == rep.d_g && rep.lambda_f == rep.lambda_g) ? "PASS" : "FAIL";
    }
    return rep;
}

}  // namespace lenum
