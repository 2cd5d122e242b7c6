#include <doctest.h>

#include "oracles.hpp"
#include "lenum/lenumbers.hpp"

using namespace lenum;
using oracles::P;

namespace {

const char* kWorked = "z1^2*z2^2 + z2^4 + z3^4";

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("estimate_critical_dimension") {
    CHECK(estimate_critical_dimension(P(kWorked, 3)).d == 1);  // line singularity
    CHECK(estimate_critical_dimension(P("z1^2 + z2^2 + z3^2", 3)).d == 0);
    auto est = estimate_critical_dimension(P("z2^2", 2));
    CHECK(est.d == 1);
    CHECK(est.heuristic);
}

TEST_CASE("choose_exponents") {
    ExponentPlan plan = choose_exponents(P(kWorked, 3), 1);
    CHECK(plan.alphas() == std::vector<std::int64_t>{5});  // max{3, m+1, deg+1} = 5
    CHECK(plan.base[0].degree_shortcut == 4);
    CHECK(plan.boosted_alphas()[0] >= 10);

    ExponentPlan line = choose_exponents(P("z2^2", 2), 1);
    CHECK(line.alphas() == std::vector<std::int64_t>{3});  // bound 2 -> exponent 3

    CHECK_THROWS_AS(choose_exponents(P("z1^3 + z2^2", 2), 1), InvalidInput);  // axis gate
}

TEST_CASE("plan_from_alphas validates the exponent condition") {
    Polynomial f = P(kWorked, 3);
    ExponentPlan ok = plan_from_alphas(f, {5});
    CHECK(ok.alphas() == std::vector<std::int64_t>{5});
    CHECK_THROWS_AS(plan_from_alphas(f, {3}), InvalidInput);   // 3 <= m(f) = 4
    CHECK_THROWS_AS(plan_from_alphas(f, {4}), InvalidInput);   // 4 <= m(f) = 4
    CHECK_THROWS_AS(plan_from_alphas(P("z1^3 + z2^2", 2), {5}), InvalidInput);
}

TEST_CASE("le_numbers: worked example") {
    Polynomial f = P(kWorked, 3);
    LeResult r = le_numbers(f, 1, plan_from_alphas(f, {5}));
    CHECK(r.lambdas == ints({18, 3}));
    CHECK(r.nu0 == 16);
    CHECK(r.nutilde == ints({3}));
    CHECK(r.euler == 15);
    CHECK(r.mu_fd == 30);
    CHECK(r.nu_fd == 30);
    CHECK(r.all_pass());

    // any admissible exponent gives the same Le numbers
    LeResult r7 = le_numbers(f, 1, plan_from_alphas(f, {7}), {});
    CHECK(r7.lambdas == r.lambdas);

    // default plan picks alpha = 5 as well
    LeResult rd = le_numbers(f, 1, choose_exponents(f, 1), {});
    CHECK(rd.alphas == std::vector<std::int64_t>{5});
    CHECK(rd.lambdas == r.lambdas);
}

TEST_CASE("le_numbers: derived line-singularity fixture") {
    Polynomial f = P("z2^2", 2);
    LeResult r = le_numbers(f, 1, choose_exponents(f, 1));
    CHECK(r.lambdas == ints({0, 1}));
    CHECK(r.nu0 == -2);
    CHECK(r.nutilde == ints({1}));
    CHECK(r.euler == 1);
    CHECK(r.all_pass());
}

TEST_CASE("le_numbers: plane singularity with d = 2") {
    // f = z3^2 is singular along the whole (z1,z2)-plane. Its Milnor fibre is
    // two parallel planes, so the reduced Euler characteristic is 1, and the
    // augmented Milnor numbers (a-1)(b-1) force lambda = (0, 0, 1).
    Polynomial f = P("z3^2", 3);
    auto est = estimate_critical_dimension(f);
    CHECK(est.d == 2);
    LeResult r = le_numbers(f, 2, choose_exponents(f, 2));
    CHECK(r.lambdas == ints({0, 0, 1}));
    CHECK(r.euler == 1);
    CHECK(r.all_pass());
}

TEST_CASE("le_numbers: dimension preconditions") {
    Polynomial f = P(kWorked, 3);
    CHECK_THROWS_AS(le_numbers(f, 0, choose_exponents(P("z2^2", 2), 1)), InvalidInput);
    Polynomial g = P("z1*z2*z3", 3);  // no pure powers, so the gate stays quiet
    ExponentPlan plan3 = choose_exponents(g, 3);
    CHECK_THROWS_AS(le_numbers(g, 3, plan3), InvalidInput);  // d > n-1
}

TEST_CASE("consistency_check: mutation is caught") {
    Polynomial f = P(kWorked, 3);
    ExponentPlan plan = plan_from_alphas(f, {5});
    LeResult r = le_numbers(f, 1, plan);
    auto good = consistency_check(f, plan, r);
    REQUIRE(good.size() == 1);
    CHECK(good[0].pass);

    LeResult corrupted = r;
    corrupted.lambdas[1] += 1;
    auto bad = consistency_check(f, plan, corrupted);
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass);
}

TEST_CASE("euler_characteristic: identities") {
    Polynomial f = P("z2^2", 2);
    LeResult r = le_numbers(f, 1, choose_exponents(f, 1));
    CHECK(euler_characteristic(r) == 1);  // (-1)^1 * (-2 + 1)

    // all-zero lambdas force nu0 = -(-1)^n and a vanishing characteristic
    LeResult zero;
    zero.n = 3;
    zero.d = 1;
    zero.lambdas = ints({0, 0});
    zero.nutilde = ints({0});
    zero.nu0 = 1;  // -(-1)^3
    CHECK(euler_characteristic(zero) == 0);
}

TEST_CASE("compare: perturbed coefficients, reflexivity, different diagrams") {
    Polynomial f = P(kWorked, 3);
    CompareOptions opts;
    opts.witness.trials = 6;

    CompareReport same_support = compare(f, P("z1^2*z2^2 + 2*z2^4 + 3*z3^4", 3), opts);
    CHECK(same_support.diagrams_equal);
    CHECK(same_support.verdict == "PASS");
    CHECK(same_support.lambda_f == ints({18, 3}));
    CHECK(same_support.lambda_g == ints({18, 3}));
    CHECK(same_support.d_f == 1);
    CHECK(same_support.d_g == 1);
    REQUIRE(same_support.witness_f.has_value());
    CHECK_FALSE(same_support.witness_f->witness.has_value());
    CHECK_FALSE(same_support.witness_g->witness.has_value());

    CompareReport reflexive = compare(f, f, opts);
    CHECK(reflexive.diagrams_equal);
    CHECK(reflexive.verdict == "PASS");
    CHECK(reflexive.lambda_f == reflexive.lambda_g);

    CompareReport different = compare(f, P("z2^4 + z3^4", 3), opts);
    CHECK_FALSE(different.diagrams_equal);
    CHECK(different.verdict == "DIAGRAMS_DIFFER");
}

TEST_CASE("compare: isolated germs fall back to Milnor numbers") {
    CompareOptions opts;
    opts.run_witness = false;
    CompareReport rep = compare(P("z1^2 + z2^2", 2), P("z1^2 + 5*z2^2", 2), opts);
    CHECK(rep.diagrams_equal);
    CHECK(rep.d_f == 0);
    CHECK(rep.verdict == "PASS");
    CHECK(rep.lambda_f == ints({1}));
}

TEST_CASE("degeneracy_witness_search") {
    // worked example: non-degenerate for generic coefficients; nothing found
    WitnessReport clean = degeneracy_witness_search(P(kWorked, 3), {12, 99, 1e-8, false});
    CHECK_FALSE(clean.witness.has_value());

    // (z1+z2)^2: the edge function has torus zeros along z1 = -z2
    WitnessReport hit =
        degeneracy_witness_search(P("z1^2 + 2*z1*z2 + z2^2", 2), {12, 99, 1e-8, false});
    REQUIRE(hit.witness.has_value());
    CHECK(hit.witness->residual < 1e-8);
    // the witness point sits near the line z1 = -z2 on the torus
    auto z = hit.witness->point;
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z[0] + z[1]) < 1e-6);

    // a monomial germ is certified exactly, no sampling needed
    WitnessReport mono = degeneracy_witness_search(P("z1^4", 1), {12, 99, 1e-8, false});
    CHECK_FALSE(mono.witness.has_value());
    CHECK(mono.monomial_certified == mono.faces_checked);

    // determinism: same seed, same report
    WitnessReport again =
        degeneracy_witness_search(P("z1^2 + 2*z1*z2 + z2^2", 2), {12, 99, 1e-8, false});
    REQUIRE(again.witness.has_value());
    CHECK(again.witness->residual == hit.witness->residual);
    CHECK(again.witness->point == hit.witness->point);
}

TEST_CASE("property: le pipeline is order independent end to end") {
    Polynomial f = P(kWorked, 3);
    ExponentPlan plan = plan_from_alphas(f, {5});
    LeResult base = le_numbers(f, 1, plan, {});
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        PipelineOptions opts;
        opts.order = VertexOrder::seeded(seed);
        LeResult r = le_numbers(f, 1, plan, opts);
        CHECK(r.lambdas == base.lambdas);
        CHECK(r.nu0 == base.nu0);
        CHECK(r.nutilde == base.nutilde);
    }
}
