#include "lenum/report.hpp"

#include <bit>
#include <sstream>

namespace lenum {

namespace {

Json ints_to_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::vector<Int> ints_from_json(const Json& a) {
    std::vector<Int> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
}

Json checks_to_json(const std::vector<Check>& checks) {
    Json a = Json::array();
    for (const auto& c : checks)
        a.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
}

std::vector<Check> checks_from_json(const Json& a) {
    std::vector<Check> v;
    for (const auto& c : a)
        v.push_back(Check{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                          c.at("detail").get<std::string>()});
    return v;
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1) out.push_back(i + 1);
    return out;
}

Json vert_to_json(const ExponentVector& e) {
    Json a = Json::array();
    for (auto x : e) a.push_back(x);
    return a;
}

Json simplex_to_json(const DumpSimplex& s) {
    Json verts = Json::array();
    for (const auto& v : s.simplex.verts) verts.push_back(vert_to_json(v));
    return Json{{"verts", verts}, {"volume", to_string(s.volume)}};
}

std::string simplex_text(const Simplex& s) {
    std::ostringstream out;
    out << "{O";
    for (const auto& v : s.verts) {
        out << ",(";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ")";
    }
    out << "}";
    return out.str();
}

std::string column_text(const std::vector<DumpSimplex>& entries) {
    if (entries.empty()) return "(empty;0)";
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << " ";
        out << "(" << simplex_text(entries[i].simplex) << ";" << to_string(entries[i].volume)
            << ")";
    }
    return out.str();
}

}  // namespace

Json to_json(const LeResult& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "le_result";
    j["n"] = r.n;
    j["d"] = r.d;
    j["alphas"] = r.alphas;
    j["boosted_alphas"] = r.boosted_alphas;
    j["lambdas"] = ints_to_json(r.lambdas);
    j["nu0"] = to_string(r.nu0);
    j["nutilde"] = ints_to_json(r.nutilde);
    j["euler"] = to_string(r.euler);
    j["mu_fd"] = to_string(r.mu_fd);
    j["nu_fd"] = to_string(r.nu_fd);
    j["checks"] = checks_to_json(r.checks);
    j["prepolar_asserted"] = r.prepolar_asserted;
    j["variable_order"] = r.variable_order;
    return j;
}

LeResult le_result_from_json(const Json& j) {
    LeResult r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.alphas = j.at("alphas").get<std::vector<std::int64_t>>();
    r.boosted_alphas = j.at("boosted_alphas").get<std::vector<std::int64_t>>();
    r.lambdas = ints_from_json(j.at("lambdas"));
    r.nu0 = Int(j.at("nu0").get<std::string>());
    r.nutilde = ints_from_json(j.at("nutilde"));
    r.euler = Int(j.at("euler").get<std::string>());
    r.mu_fd = Int(j.at("mu_fd").get<std::string>());
    r.nu_fd = Int(j.at("nu_fd").get<std::string>());
    r.checks = checks_from_json(j.at("checks"));
    r.prepolar_asserted = j.at("prepolar_asserted").get<bool>();
    r.variable_order = j.at("variable_order").get<std::vector<int>>();
    return r;
}

Json to_json(const WitnessReport& r) {
    Json j;
    j["faces_checked"] = r.faces_checked;
    j["monomial_certified"] = r.monomial_certified;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    if (r.witness) {
        Json verts = Json::array();
        for (const auto& v : r.witness->face_verts) verts.push_back(vert_to_json(v));
        Json point = Json::array();
        for (const auto& z : r.witness->point)
            point.push_back(Json::array({z.real(), z.imag()}));
        j["witness"] = Json{{"face_verts", verts}, {"point", point},
                            {"residual", r.witness->residual}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

WitnessReport witness_report_from_json(const Json& j) {
    WitnessReport r;
    r.faces_checked = j.at("faces_checked").get<int>();
    r.monomial_certified = j.at("monomial_certified").get<int>();
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("witness").is_null()) {
        DegeneracyWitness w;
        for (const auto& v : j.at("witness").at("face_verts"))
            w.face_verts.push_back(v.get<ExponentVector>());
        for (const auto& p : j.at("witness").at("point"))
            w.point.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        w.residual = j.at("witness").at("residual").get<double>();
        r.witness = std::move(w);
    }
    return r;
}

Json to_json(const CompareReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "compare_report";
    j["diagrams_equal"] = r.diagrams_equal;
    j["d_f"] = r.d_f ? Json(*r.d_f) : Json(nullptr);
    j["d_g"] = r.d_g ? Json(*r.d_g) : Json(nullptr);
    j["lambda_f"] = ints_to_json(r.lambda_f);
    j["lambda_g"] = ints_to_json(r.lambda_g);
    j["verdict"] = r.verdict;
    j["error_f"] = r.error_f ? Json(*r.error_f) : Json(nullptr);
    j["error_g"] = r.error_g ? Json(*r.error_g) : Json(nullptr);
    j["witness_f"] = r.witness_f ? to_json(*r.witness_f) : Json(nullptr);
    j["witness_g"] = r.witness_g ? to_json(*r.witness_g) : Json(nullptr);
    return j;
}

CompareReport compare_report_from_json(const Json& j) {
    CompareReport r;
    r.diagrams_equal = j.at("diagrams_equal").get<bool>();
    if (!j.at("d_f").is_null()) r.d_f = j.at("d_f").get<int>();
    if (!j.at("d_g").is_null()) r.d_g = j.at("d_g").get<int>();
    r.lambda_f = ints_from_json(j.at("lambda_f"));
    r.lambda_g = ints_from_json(j.at("lambda_g"));
    r.verdict = j.at("verdict").get<std::string>();
    if (!j.at("error_f").is_null()) r.error_f = j.at("error_f").get<std::string>();
    if (!j.at("error_g").is_null()) r.error_g = j.at("error_g").get<std::string>();
    if (!j.at("witness_f").is_null()) r.witness_f = witness_report_from_json(j.at("witness_f"));
    if (!j.at("witness_g").is_null()) r.witness_g = witness_report_from_json(j.at("witness_g"));
    return r;
}

Json to_json(const NewtonNumber& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "newton_number";
    j["infinite"] = r.infinite;
    j["value"] = r.infinite ? Json(nullptr) : Json(to_string(r.value));
    j["convenient_direct"] = r.convenient_direct;
    Json ev = Json::array();
    for (const auto& [m, v] : r.evidence) ev.push_back(Json::array({m, to_string(v)}));
    j["evidence"] = ev;
    return j;
}

NewtonNumber newton_number_from_json(const Json& j) {
    NewtonNumber r;
    r.infinite = j.at("infinite").get<bool>();
    if (!j.at("value").is_null()) r.value = Int(j.at("value").get<std::string>());
    r.convenient_direct = j.at("convenient_direct").get<bool>();
    for (const auto& e : j.at("evidence"))
        r.evidence.emplace_back(e.at(0).get<std::int64_t>(), Int(e.at(1).get<std::string>()));
    return r;
}

Json diagram_json(const NewtonDiagram& d) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "diagram";
    j["n"] = d.nvars();
    j["coords"] = mask_to_indices(d.coords());
    Json verts = Json::array();
    for (const auto& v : d.vertices()) verts.push_back(vert_to_json(v));
    j["vertices"] = verts;
    Json maximal = Json::array();
    for (auto id : d.maximal()) {
        const Face& f = d.face_at(id);
        Json normal = Json::array();
        for (const auto& x : f.normal) normal.push_back(to_string(x));
        maximal.push_back(Json{{"verts", f.verts},
                               {"dim", f.dim},
                               {"normal", normal},
                               {"level", to_string(f.level)}});
    }
    j["maximal_faces"] = maximal;
    return j;
}

std::string diagram_text(const NewtonDiagram& d) {
    std::ostringstream out;
    out << "vertices (" << d.vertices().size() << "):\n";
    for (std::size_t i = 0; i < d.vertices().size(); ++i) {
        out << "  [" << i << "] (";
        const auto& v = d.vertices()[i];
        for (std::size_t c = 0; c < v.size(); ++c) out << (c ? "," : "") << v[c];
        out << ")\n";
    }
    out << "maximal faces (" << d.maximal().size() << "):\n";
    for (auto id : d.maximal()) {
        const Face& f = d.face_at(id);
        out << "  dim " << f.dim << " verts {";
        for (std::size_t i = 0; i < f.verts.size(); ++i)
            out << (i ? "," : "") << f.verts[i];
        out << "} normal (";
        for (std::size_t i = 0; i < f.normal.size(); ++i)
            out << (i ? "," : "") << to_string(f.normal[i]);
        out << ") level " << to_string(f.level) << "\n";
    }
    return out.str();
}

std::string render_text(const WitnessReport& r) {
    std::ostringstream out;
    if (r.witness) {
        out << "degeneracy witness FOUND (residual " << r.witness->residual << ") on face {";
        for (std::size_t i = 0; i < r.witness->face_verts.size(); ++i) {
            const auto& v = r.witness->face_verts[i];
            out << (i ? ",(" : "(");
            for (std::size_t c = 0; c < v.size(); ++c) out << (c ? "," : "") << v[c];
            out << ")";
        }
        out << "}";
    } else {
        out << "no degeneracy witness found (heuristic; " << r.trials << " trials, "
            << r.monomial_certified << "/" << r.faces_checked << " faces certified as monomials)";
    }
    return out.str();
}

std::string render_text(const LeResult& r) {
    std::ostringstream out;
    out << "n = " << r.n << ", d = " << r.d << "\n";
    out << "alphas = [";
    for (std::size_t i = 0; i < r.alphas.size(); ++i) out << (i ? "," : "") << r.alphas[i];
    out << "]  (boosted [";
    for (std::size_t i = 0; i < r.boosted_alphas.size(); ++i)
        out << (i ? "," : "") << r.boosted_alphas[i];
    out << "])\n";
    for (std::size_t k = 0; k < r.lambdas.size(); ++k)
        out << "lambda^" << k << " = " << to_string(r.lambdas[k]) << "\n";
    out << "nu0(f_d) = " << to_string(r.nu0) << "\n";
    for (std::size_t k = 0; k < r.nutilde.size(); ++k)
        out << "nutilde_" << (k + 1) << "(f_d) = " << to_string(r.nutilde[k]) << "\n";
    out << "reduced Euler characteristic = " << to_string(r.euler) << "\n";
    out << "mu(f_d) reconstruction = " << to_string(r.mu_fd) << ", nu(f_d) = "
        << to_string(r.nu_fd) << "\n";
    out << "prepolar coordinates: "
        << (r.prepolar_asserted ? "asserted by the user" : "assumed (not verified)") << "\n";
    for (const auto& c : r.checks)
        out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail
            << ")\n";
    return out.str();
}

std::string render_text(const CompareReport& r) {
    std::ostringstream out;
    out << "diagrams equal: " << (r.diagrams_equal ? "yes" : "no") << "\n";
    auto side = [&](const char* tag, const std::optional<int>& d, const std::vector<Int>& lam,
                    const std::optional<std::string>& err,
                    const std::optional<WitnessReport>& wit) {
        out << tag << ": ";
        if (err) {
            out << "error: " << *err << "\n";
            return;
        }
        out << "d = " << (d ? std::to_string(*d) : "?") << ", lambda = [";
        for (std::size_t i = 0; i < lam.size(); ++i) out << (i ? "," : "") << to_string(lam[i]);
        out << "]\n";
        if (wit) out << "  " << render_text(*wit) << "\n";
    };
    side("f", r.d_f, r.lambda_f, r.error_f, r.witness_f);
    side("g", r.d_g, r.lambda_g, r.error_g, r.witness_g);
    out << "verdict: " << r.verdict << "\n";
    return out.str();
}

std::string render_text(const NewtonNumber& r) {
    std::ostringstream out;
    if (r.infinite) out << "INFINITE\n";
    else out << to_string(r.value) << "\n";
    if (!r.evidence.empty()) {
        out << "evidence:";
        for (const auto& [m, v] : r.evidence) out << " (m=" << m << ", " << to_string(v) << ")";
        out << "\n";
    }
    return out.str();
}

DecompositionDump decomposition_dump(const Polynomial& f, std::uint32_t J,
                                     const VertexOrder& order, bool parallel) {
    const NewtonDiagram diagram = compact_faces(f);
    const OrderMap omap(order, diagram.vertices());
    const DecompositionFamily fam = build_family(diagram, omap, parallel);
    const int n = f.nvars();

    DecompositionDump dump;
    dump.n = n;
    dump.J = J;

    std::map<int, SimplexClass> classes;
    for (int i = 1; i <= n; ++i)
        if ((J >> (i - 1)) & 1) classes.emplace(i, classify(fam, J, i, f));
    SimplexClass class0 = classify(fam, J, 0, f);

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        DumpRow row;
        row.mask = mask;
        const int k = std::popcount(mask);
        Int fact = factorial(k);
        row.sign_factorial = ((n - k) % 2 == 0) ? fact : Int(-fact);
        for (const auto& s : fam.at(mask).simplices)
            row.xi.push_back(DumpSimplex{s, simplex_volume(s)});
        for (auto& [i0, cls] : classes) {
            std::vector<DumpSimplex> col;
            for (auto idx : cls.selected[mask]) {
                Simplex red = reduce_simplex(fam.at(mask).simplices[idx], i0);
                Rat vol = simplex_volume(red);
                col.push_back(DumpSimplex{std::move(red), std::move(vol)});
            }
            row.reduced.emplace(i0, std::move(col));
        }
        for (auto idx : class0.selected[mask]) {
            const Simplex& s = fam.at(mask).simplices[idx];
            row.class0.push_back(DumpSimplex{s, simplex_volume(s)});
        }
        dump.rows.push_back(std::move(row));
    }
    return dump;
}

Json to_json(const DecompositionDump& d) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "decomposition";
    j["n"] = d.n;
    j["J"] = mask_to_indices(d.J);
    Json rows = Json::array();
    for (const auto& row : d.rows) {
        Json r;
        r["I"] = mask_to_indices(row.mask);
        r["sign_factorial"] = to_string(row.sign_factorial);
        Json xi = Json::array();
        for (const auto& s : row.xi) xi.push_back(simplex_to_json(s));
        r["xi"] = xi;
        Json reduced;
        for (const auto& [i0, col] : row.reduced) {
            Json c = Json::array();
            for (const auto& s : col) c.push_back(simplex_to_json(s));
            reduced[std::to_string(i0)] = c;
        }
        r["reduced"] = reduced.is_null() ? Json::object() : reduced;
        Json c0 = Json::array();
        for (const auto& s : row.class0) c0.push_back(simplex_to_json(s));
        r["class0"] = c0;
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j;
}

std::string render_text(const DecompositionDump& d) {
    std::ostringstream out;
    out << "I | sign*|I|! | Xi_I";
    for (int i = 1; i <= d.n; ++i)
        if ((d.J >> (i - 1)) & 1) out << " | reduced[i0=" << i << "]";
    out << " | no-axis-edge\n";
    for (const auto& row : d.rows) {
        out << "{";
        bool first = true;
        for (int idx : mask_to_indices(row.mask)) {
            out << (first ? "" : ",") << idx;
            first = false;
        }
        out << "} | " << to_string(row.sign_factorial) << " | " << column_text(row.xi);
        for (const auto& [i0, col] : row.reduced) out << " | " << column_text(col);
        out << " | " << column_text(row.class0) << "\n";
    }
    return out.str();
}

}  // namespace lenum
