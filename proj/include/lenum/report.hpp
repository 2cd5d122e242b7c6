#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "lenum/lenumbers.hpp"

namespace lenum {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Big integers and rationals travel as decimal strings so every report
// round-trips exactly through JSON.
Json to_json(const LeResult& r);
LeResult le_result_from_json(const Json& j);

Json to_json(const CompareReport& r);
CompareReport compare_report_from_json(const Json& j);

Json to_json(const NewtonNumber& r);
NewtonNumber newton_number_from_json(const Json& j);

Json to_json(const WitnessReport& r);
WitnessReport witness_report_from_json(const Json& j);

Json diagram_json(const NewtonDiagram& d);

std::string render_text(const LeResult& r);
std::string render_text(const CompareReport& r);
std::string render_text(const NewtonNumber& r);
std::string render_text(const WitnessReport& r);
std::string diagram_text(const NewtonDiagram& d);

// Per-subset decomposition data in the shape of a classification table:
// the full Xi_I, then per i0 in J the reduced class, then the no-axis-edge
// class.
struct DumpSimplex {
    Simplex simplex;
    Rat volume;
};

struct DumpRow {
    std::uint32_t mask = 0;
    Int sign_factorial;
    std::vector<DumpSimplex> xi;
    std::map<int, std::vector<DumpSimplex>> reduced;
    std::vector<DumpSimplex> class0;
};

struct DecompositionDump {
    int n = 0;
    std::uint32_t J = 0;
    std::vector<DumpRow> rows;
};

DecompositionDump decomposition_dump(const Polynomial& f, std::uint32_t J,
                                     const VertexOrder& order = {}, bool parallel = false);
Json to_json(const DecompositionDump& d);
std::string render_text(const DecompositionDump& d);

}  // namespace lenum
