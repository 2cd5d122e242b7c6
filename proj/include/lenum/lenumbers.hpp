#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenum/newton.hpp"
#include "lenum/poly.hpp"

namespace lenum {

// One augmentation step with its provenance.
struct AlphaStep {
    std::int64_t alpha = 0;
    Rat bound_used;                                // axis-intercept bound of f_{p-1}
    std::optional<std::int64_t> degree_shortcut;   // homogeneous-degree threshold, if applied
};

// The exponents alpha_1..alpha_d defining f_d, plus a strictly larger
// "boosted" plan used as the stabilization surrogate for the polar-ratio
// condition that is not computed here.
struct ExponentPlan {
    int d = 0;
    std::vector<AlphaStep> base;
    std::vector<AlphaStep> boosted;

    std::vector<std::int64_t> alphas() const;
    std::vector<std::int64_t> boosted_alphas() const;
};

// alpha_p = max{3, ceil(bound(f_{p-1}))+1, deg(f)+1 if f homogeneous}.
ExponentPlan choose_exponents(const Polynomial& f, int d);

// Wraps user-supplied exponents, validating alpha_p > max{2, bound(f_{p-1})}.
ExponentPlan plan_from_alphas(const Polynomial& f, const std::vector<std::int64_t>& alphas);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PipelineOptions {
    VertexOrder order;
    bool parallel = false;
    int horizon = 6;
    bool prepolar_asserted = false;
};

struct LeResult {
    int n = 0;
    int d = 0;
    std::vector<std::int64_t> alphas;
    std::vector<std::int64_t> boosted_alphas;
    std::vector<Int> lambdas;   // lambda^0..lambda^d
    Int nu0 = 0;                // nu_0(f_d)
    std::vector<Int> nutilde;   // nutilde_1..nutilde_d of f_d
    Int euler = 0;              // reduced Euler characteristic of the Milnor fibre
    Int mu_fd = 0;              // Milnor number of f_d reconstructed from the lambdas
    Int nu_fd = 0;              // Newton number of f_d
    std::vector<Check> checks;
    bool prepolar_asserted = false;
    std::vector<int> variable_order;  // permutation applied before the run; empty = identity

    bool all_pass() const;
};

// Least q >= 0 such that the Newton number of f + z_1^M + ... + z_q^M is
// finite. Heuristic: the divergence test is horizon-bounded.
struct EstimateResult {
    int d = 0;
    bool heuristic = true;
    std::int64_t probe_exponent = 0;
    std::vector<std::pair<int, bool>> probes;  // (q, finite?)
};
EstimateResult estimate_critical_dimension(const Polynomial& f, const PipelineOptions& opts = {});

// Full run of the Le-number formulas on f_d, with the boosted re-run and the
// consistency checks folded in. Negative Le numbers and unstable plans are
// hard errors.
LeResult le_numbers(const Polynomial& f, int d, const ExponentPlan& plan,
                    const PipelineOptions& opts = {});

// The two routes to the reduced Euler characteristic; they must agree.
Int euler_characteristic(const LeResult& r);

// Milnor-number reconstruction versus the Newton number of f_d. Verdicts are
// recorded, not thrown.
std::vector<Check> consistency_check(const Polynomial& f, const ExponentPlan& plan,
                                     const LeResult& r, const PipelineOptions& opts = {});

// Randomized search for a non-degeneracy violation. Finding nothing is not a
// certificate.
struct DegeneracyWitness {
    std::vector<ExponentVector> face_verts;
    std::vector<std::complex<double>> point;
    double residual = 0.0;
};

struct WitnessOptions {
    int trials = 16;
    std::uint64_t seed = 12345;
    double tol = 1e-8;
    bool parallel = false;
};

struct WitnessReport {
    int faces_checked = 0;
    int monomial_certified = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<DegeneracyWitness> witness;
};

WitnessReport degeneracy_witness_search(const Polynomial& f, const WitnessOptions& opts = {});

struct CompareOptions {
    std::optional<int> d;
    PipelineOptions pipeline;
    WitnessOptions witness;
    bool run_witness = true;
};

struct CompareReport {
    bool diagrams_equal = false;
    std::optional<int> d_f, d_g;
    std::vector<Int> lambda_f, lambda_g;
    std::string verdict;  // PASS | FAIL | DIAGRAMS_DIFFER
    std::optional<std::string> error_f, error_g;
    std::optional<WitnessReport> witness_f, witness_g;
};

// Diagram equality plus both pipelines; equal diagrams must give equal
// Le numbers.
CompareReport compare(const Polynomial& f, const Polynomial& g, const CompareOptions& opts = {});

}  // namespace lenum
