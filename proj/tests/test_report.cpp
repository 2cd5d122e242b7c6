#include <doctest.h>

#include "oracles.hpp"
#include "lenum/report.hpp"

using namespace lenum;
using oracles::P;

namespace {

const char* kWorked = "z1^2*z2^2 + z2^4 + z3^4";
const char* kWorkedAug = "z1^5 + z1^2*z2^2 + z2^4 + z3^4";

}  // namespace

TEST_CASE("le result JSON round-trips exactly") {
    Polynomial f = P(kWorked, 3);
    LeResult r = le_numbers(f, 1, plan_from_alphas(f, {5}));
    Json j = to_json(r);
    CHECK(j.at("schema_version").get<std::string>() == kSchemaVersion);
    CHECK(j.at("lambdas") == Json::array({"18", "3"}));
    CHECK(j.at("nu0").get<std::string>() == "16");
    CHECK(j.at("euler").get<std::string>() == "15");

    LeResult back = le_result_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.lambdas == r.lambdas);
    CHECK(back.checks.size() == r.checks.size());
}

TEST_CASE("compare report JSON round-trips, including witnesses") {
    CompareOptions opts;
    opts.witness.trials = 4;
    CompareReport rep = compare(P(kWorked, 3), P("z1^2*z2^2 + 2*z2^4 + 3*z3^4", 3), opts);
    Json j = to_json(rep);
    CompareReport back = compare_report_from_json(j);
    CHECK(to_json(back) == j);

    CompareReport differ = compare(P(kWorked, 3), P("z2^4 + z3^4", 3), opts);
    Json jd = to_json(differ);
    CHECK(to_json(compare_report_from_json(jd)) == jd);
}

TEST_CASE("newton number JSON round-trips") {
    for (const char* text : {"z1^2 + z2^2", "z2^2"}) {
        NewtonNumber nu = newton_number(P(text, 2));
        Json j = to_json(nu);
        CHECK(to_json(newton_number_from_json(j)) == j);
    }
}

TEST_CASE("byte-identical output for identical configuration") {
    Polynomial f = P(kWorked, 3);
    PipelineOptions opts;
    opts.order = VertexOrder::seeded(42);
    std::string a = to_json(le_numbers(f, 1, plan_from_alphas(f, {5}), opts)).dump(2);
    std::string b = to_json(le_numbers(f, 1, plan_from_alphas(f, {5}), opts)).dump(2);
    CHECK(a == b);

    WitnessOptions wopts{8, 7, 1e-8, false};
    std::string wa = to_json(degeneracy_witness_search(f, wopts)).dump(2);
    std::string wb = to_json(degeneracy_witness_search(f, wopts)).dump(2);
    CHECK(wa == wb);
}

TEST_CASE("diagram JSON lists vertices and maximal faces") {
    Json j = diagram_json(compact_faces(P(kWorked, 3)));
    CHECK(j.at("n") == 3);
    CHECK(j.at("vertices").size() == 3);
    REQUIRE(j.at("maximal_faces").size() == 1);
    CHECK(j.at("maximal_faces")[0].at("normal") == Json::array({"1", "1", "1"}));
    CHECK(j.at("maximal_faces")[0].at("level").get<std::string>() == "4");
}

TEST_CASE("decomposition dump carries the classification columns") {
    DecompositionDump dump = decomposition_dump(P(kWorkedAug, 3), 0b001);
    REQUIRE(dump.rows.size() == 7);
    const DumpRow* row1 = nullptr;
    for (const auto& row : dump.rows)
        if (row.mask == 0b001) row1 = &row;
    REQUIRE(row1 != nullptr);
    CHECK(row1->sign_factorial == 1);
    REQUIRE(row1->reduced.at(1).size() == 1);
    CHECK(row1->reduced.at(1)[0].volume == Rat(1));  // ({O,D};1)
    CHECK(row1->class0.empty());

    // empty restriction of the non-convenient germ renders as an empty row
    DecompositionDump flat = decomposition_dump(P(kWorked, 3), 0);
    const DumpRow* axis1 = nullptr;
    for (const auto& row : flat.rows)
        if (row.mask == 0b001) axis1 = &row;
    REQUIRE(axis1 != nullptr);
    CHECK(axis1->xi.empty());
    std::string text = render_text(flat);
    CHECK(text.find("(empty;0)") != std::string::npos);

    Json j = to_json(dump);
    CHECK(j.at("rows").size() == 7);
}
