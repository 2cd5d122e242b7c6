// Command-line front-end. Exit codes: 0 success/PASS, 1 usage error,
// 2 computation error, 3 compare verdict FAIL.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lenum/report.hpp"

namespace {

using namespace lenum;

struct CommonOpts {
    int n = 0;
    std::int64_t order_seed = -1;  // -1 = lexicographic order
    int horizon = 6;
    int witness_trials = 16;
    std::uint64_t witness_seed = 12345;
    std::string format = "text";
    std::vector<int> permute;
    bool parallel = false;
    bool assume_prepolar = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "variable count (z1..zn)")->required();
    cmd->add_option("--order-seed", o.order_seed,
                    "seed for the triangulation vertex order (default: lexicographic)");
    cmd->add_option("--horizon", o.horizon, "doublings before declaring divergence")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--witness-trials", o.witness_trials,
                    "random starts per face for the degeneracy search (0 disables)");
    cmd->add_option("--witness-seed", o.witness_seed, "seed for the degeneracy search");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--permute", o.permute,
                    "variable permutation applied before the run, e.g. 2,1,3")
        ->delimiter(',');
    cmd->add_flag("--parallel", o.parallel, "enable the OpenMP decomposition kernel");
    cmd->add_flag("--assume-prepolar", o.assume_prepolar,
                  "record that the coordinates are asserted prepolar");
}

VertexOrder order_of(const CommonOpts& o) {
    return o.order_seed < 0 ? VertexOrder::lex()
                            : VertexOrder::seeded(static_cast<std::uint64_t>(o.order_seed));
}

PipelineOptions pipeline_of(const CommonOpts& o) {
    return PipelineOptions{order_of(o), o.parallel, o.horizon, o.assume_prepolar};
}

std::string read_poly_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw InvalidInput("cannot open polynomial file " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Polynomial load_poly(const std::string& arg, const CommonOpts& o) {
    Polynomial p = parse_polynomial(read_poly_arg(arg), o.n);
    if (!o.permute.empty()) p = p.permuted(o.permute);
    return p;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

LeResult run_le(const Polynomial& f, const CommonOpts& o, std::optional<int> d_opt,
                const std::vector<std::int64_t>& alphas) {
    PipelineOptions popts = pipeline_of(o);
    int d = d_opt ? *d_opt : estimate_critical_dimension(f, popts).d;
    if (d == 0)
        throw ComputationError(
            "the singularity looks isolated (d = 0); use the `newton` command for the Milnor "
            "number");
    ExponentPlan plan =
        alphas.empty() ? choose_exponents(f, d) : plan_from_alphas(f, alphas);
    if (!alphas.empty() && plan.d != d)
        throw InvalidInput("--alphas length does not match d");
    LeResult r = le_numbers(f, d, plan, popts);
    r.variable_order = o.permute;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Le numbers, Newton numbers and Milnor-fibre Euler characteristic of a "
        "Newton non-degenerate polynomial germ, computed from its Newton diagram"};
    app.require_subcommand(1);

    CommonOpts le_o, newton_o, diagram_o, compare_o, euler_o;
    std::string le_poly, newton_poly, diagram_poly, cmp_f, cmp_g, euler_poly;
    int le_d = -1, euler_d = -1, cmp_d = -1;
    std::vector<std::int64_t> le_alphas, euler_alphas;
    bool diagram_decomp = false;
    std::vector<int> diagram_J;

    CLI::App* le = app.add_subcommand("le", "full Le-number pipeline");
    le->add_option("poly", le_poly, "polynomial (inline or @file)")->required();
    add_common(le, le_o);
    le->add_option("--d", le_d, "critical-locus dimension (default: estimated)");
    le->add_option("--alphas", le_alphas, "explicit axis exponents alpha_1..alpha_d")
        ->delimiter(',');

    CLI::App* newton = app.add_subcommand("newton", "Newton number (finite or INFINITE)");
    newton->add_option("poly", newton_poly)->required();
    add_common(newton, newton_o);

    CLI::App* diagram = app.add_subcommand("diagram", "Newton diagram dump");
    diagram->add_option("poly", diagram_poly)->required();
    add_common(diagram, diagram_o);
    diagram->add_flag("--decomposition", diagram_decomp,
                      "dump the cone decompositions per coordinate subset");
    diagram->add_option("--J", diagram_J, "classification axes for the decomposition dump")
        ->delimiter(',');

    CLI::App* cmp = app.add_subcommand("compare", "diagram and Le-number comparison");
    cmp->add_option("f", cmp_f)->required();
    cmp->add_option("g", cmp_g)->required();
    add_common(cmp, compare_o);
    cmp->add_option("--d", cmp_d, "critical-locus dimension for both germs");

    CLI::App* euler = app.add_subcommand("euler", "reduced Euler characteristic of the Milnor fibre");
    euler->add_option("poly", euler_poly)->required();
    add_common(euler, euler_o);
    euler->add_option("--d", euler_d, "critical-locus dimension (default: estimated)");
    euler->add_option("--alphas", euler_alphas, "explicit axis exponents")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (le->parsed()) {
            Polynomial f = load_poly(le_poly, le_o);
            LeResult r = run_le(f, le_o, le_d >= 0 ? std::optional<int>(le_d) : std::nullopt,
                                le_alphas);
            std::optional<WitnessReport> wit;
            if (le_o.witness_trials > 0)
                wit = degeneracy_witness_search(
                    f, WitnessOptions{le_o.witness_trials, le_o.witness_seed, 1e-8,
                                      le_o.parallel});
            if (le_o.format == "json") {
                Json j = to_json(r);
                j["witness"] = wit ? to_json(*wit) : Json(nullptr);
                emit(j);
            } else {
                std::cout << render_text(r);
                if (wit) std::cout << render_text(*wit) << "\n";
            }
            return 0;
        }
        if (newton->parsed()) {
            Polynomial f = load_poly(newton_poly, newton_o);
            NewtonOptions nopts{newton_o.horizon, order_of(newton_o), newton_o.parallel};
            NewtonNumber nu = newton_number(f, nopts);
            if (newton_o.format == "json") emit(to_json(nu));
            else std::cout << render_text(nu);
            return 0;
        }
        if (diagram->parsed()) {
            Polynomial f = load_poly(diagram_poly, diagram_o);
            if (diagram_decomp) {
                std::uint32_t J = 0;
                for (int i : diagram_J) {
                    if (i < 1 || i > diagram_o.n) throw InvalidInput("J index out of range");
                    J |= 1u << (i - 1);
                }
                DecompositionDump dump =
                    decomposition_dump(f, J, order_of(diagram_o), diagram_o.parallel);
                if (diagram_o.format == "json") emit(to_json(dump));
                else std::cout << render_text(dump);
            } else {
                NewtonDiagram dia = compact_faces(f);
                if (diagram_o.format == "json") emit(diagram_json(dia));
                else std::cout << diagram_text(dia);
            }
            return 0;
        }
        if (cmp->parsed()) {
            Polynomial f = load_poly(cmp_f, compare_o);
            Polynomial g = load_poly(cmp_g, compare_o);
            CompareOptions copts;
            if (cmp_d >= 0) copts.d = cmp_d;
            copts.pipeline = pipeline_of(compare_o);
            copts.witness = WitnessOptions{compare_o.witness_trials, compare_o.witness_seed,
                                           1e-8, compare_o.parallel};
            copts.run_witness = compare_o.witness_trials > 0;
            CompareReport rep = compare(f, g, copts);
            if (compare_o.format == "json") emit(to_json(rep));
            else std::cout << render_text(rep);
            if (rep.error_f || rep.error_g) return 2;
            return rep.verdict == "FAIL" ? 3 : 0;
        }
        if (euler->parsed()) {
            Polynomial f = load_poly(euler_poly, euler_o);
            LeResult r = run_le(f, euler_o,
                                euler_d >= 0 ? std::optional<int>(euler_d) : std::nullopt,
                                euler_alphas);
            if (euler_o.format == "json") {
                Json j;
                j["schema_version"] = kSchemaVersion;
                j["type"] = "euler";
                j["n"] = r.n;
                j["d"] = r.d;
                j["euler"] = to_string(r.euler);
                j["prepolar_asserted"] = r.prepolar_asserted;
                emit(j);
            } else {
                std::cout << to_string(r.euler) << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
