// Command-line front end: loads JSON inputs, dispatches to the library,
// emits deterministic JSON reports.  Exit codes: 0 success, 1 assertion
// or domain failure, 2 input/schema error.
#include <complex>
#include <fstream>
#include <iostream>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "nonabcoh/betti/reductivity.hpp"
#include "nonabcoh/cech/moduli.hpp"
#include "nonabcoh/equivalences/equivalences.hpp"
#include "nonabcoh/error.hpp"
#include "nonabcoh/fingerprint.hpp"
#include "nonabcoh/io/json.hpp"
#include "nonabcoh/lattice/moduli.hpp"

using namespace nonabcoh;
using io::Value;

namespace {

struct RunConfig {
    double tol = 1e-9;
    std::string mode = "float";
    std::string output; // empty: stdout
    std::complex<double> base{-0.25, 0.0};
    double radius = 0.25;
    std::string coefficients = "C";
    std::string base_text = "-0.25";

    io::ParseOptions parse_options() const {
        io::ParseOptions o;
        if (mode == "exact") o.mode = numkit::Mode::exact;
        else if (mode == "float") o.mode = numkit::Mode::floating;
        else raise("SchemaError", "--mode must be exact or float");
        return o;
    }
};

struct Report {
    Value root = Value::object();
    bool failed = false;

    Report(const std::string& command, const RunConfig& config) {
        root["command"] = command;
        root["mode"] = config.mode;
        root["tolerance"] = config.tol;
        root["inputs"] = Value::object();
        root["checks"] = Value::array();
    }

    void input(const std::string& role, const std::string& path, const std::string& bytes) {
        Value v = Value::object();
        v["path"] = path;
        v["fingerprint"] = fingerprint_hex(bytes);
        root["inputs"][role] = std::move(v);
    }

    void check(const std::string& name, bool passed) {
        Value v = Value::object();
        v["name"] = name;
        v["passed"] = passed;
        root["checks"].push_back(std::move(v));
        failed = failed || !passed;
    }

    int emit(const RunConfig& config) {
        std::string text = root.dump();
        if (config.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(config.output, std::ios::binary);
            if (!out) raise("SchemaError", "cannot write '" + config.output + "'");
            out << text;
        }
        return failed ? 1 : 0;
    }
};

std::string slurp(Report& report, const std::string& role, const std::string& path) {
    std::string bytes = io::read_file(path);
    report.input(role, path, bytes);
    return bytes;
}

Value cochain_value(const cech::Cochain& c) {
    Value values = Value::object();
    const auto& simplices = c.nerve().simplices(c.degree());
    for (int i = 0; i < c.size(); ++i) {
        std::string key;
        for (int v : simplices[static_cast<size_t>(i)]) {
            if (!key.empty()) key += ',';
            key += std::to_string(v);
        }
        if (c.coefficients() == cech::Coefficients::Z)
            values[key] = c.z_at(i).get_str();
        else
            values[key] = io::scalar_value(c.s_at(i));
    }
    Value out = Value::object();
    out["degree"] = c.degree();
    out["coefficients"] = to_string(c.coefficients());
    out["values"] = std::move(values);
    return out;
}

Value cocycle_value(const localsys::GCocycle& c) {
    Value transitions = Value::object();
    const auto& edges = c.nerve().skeleton().edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        std::string key = std::to_string(edges[e][0]) + "," + std::to_string(edges[e][1]);
        transitions[key] = io::matrix_value(c.stored(static_cast<int>(e)));
    }
    Value out = Value::object();
    out["rank"] = c.rank();
    out["transitions"] = std::move(transitions);
    return out;
}

Value system_value(const fuchsian::FuchsianSystem& sys) {
    Value out = Value::object();
    out["rank"] = sys.rank();
    out["A0"] = io::matrix_value(sys.a0());
    out["A1"] = io::matrix_value(sys.a1());
    return out;
}

Value equivalence_value(const equivalences::EquivalenceReport& r) {
    Value out = Value::object();
    out["route"] = r.route;
    Value fp = Value::object();
    for (const auto& [role, hash] : r.input_fingerprints) fp[role] = hash;
    out["inputFingerprints"] = std::move(fp);
    Value before = Value::array(), after = Value::array();
    for (const auto& s : r.invariants_before) before.push_back(io::scalar_value(s));
    for (const auto& s : r.invariants_after) after.push_back(io::scalar_value(s));
    out["orbitInvariantsBefore"] = std::move(before);
    out["orbitInvariantsAfter"] = std::move(after);
    out["exactEqual"] = r.exact_equal;
    out["maxDiscrepancy"] = r.max_discrepancy;
    out["tolerance"] = r.tolerance;
    out["passed"] = r.passed;
    return out;
}

// ---- subcommand bodies -------------------------------------------------

int run_betti(const std::string& verb, const RunConfig& config, const std::string& group_path,
              const std::string& rep_path, const std::string& words_path) {
    Report report("betti " + verb, config);
    auto group = io::parse_group(slurp(report, "group", group_path));
    auto rep = io::parse_representation(slurp(report, "representation", rep_path), group,
                                        config.parse_options());
    if (verb == "check") {
        bool ok = betti::check_relations(rep, config.tol);
        report.root["result"] = Value::object();
        report.root["result"]["satisfied"] = ok;
        report.check("relations hold", ok);
    } else if (verb == "traces") {
        std::vector<betti::Word> words;
        if (!words_path.empty())
            words = io::parse_words(slurp(report, "words", words_path));
        else
            words = equivalences::standard_word_list(group);
        Value traces = Value::array();
        for (const auto& t : betti::trace_invariants(rep, words))
            traces.push_back(io::scalar_value(t));
        report.root["result"] = Value::object();
        report.root["result"]["traces"] = std::move(traces);
    } else { // reductivity
        auto verdict = betti::reductivity(rep, config.tol);
        Value result = Value::object();
        switch (verdict.status) {
            case betti::ReductivityStatus::reductive: result["status"] = "reductive"; break;
            case betti::ReductivityStatus::nonReductive: result["status"] = "nonReductive"; break;
            case betti::ReductivityStatus::unknown: result["status"] = "unknown"; break;
        }
        result["detail"] = verdict.detail;
        Value witness = Value::array();
        for (const auto& line : verdict.witness) {
            Value vec = Value::array();
            for (const auto& s : line) vec.push_back(io::scalar_value(s));
            witness.push_back(std::move(vec));
        }
        result["witness"] = std::move(witness);
        report.root["result"] = std::move(result);
    }
    return report.emit(config);
}

int run_cech(const std::string& verb, const RunConfig& config, const std::string& nerve_path,
             const std::string& cochain_path, int degree) {
    Report report("cech " + verb, config);
    auto nerve = io::parse_nerve(slurp(report, "nerve", nerve_path));
    Value result = Value::object();
    if (verb == "cohomology") {
        cech::Coefficients coeffs;
        if (config.coefficients == "Z") coeffs = cech::Coefficients::Z;
        else if (config.coefficients == "C") coeffs = cech::Coefficients::C;
        else raise("SchemaError", "--coefficients must be Z or C for cohomology");
        auto h = cech::cohomology(nerve, degree, coeffs);
        result["degree"] = h.degree;
        result["freeRank"] = h.free_rank;
        Value torsion = Value::array();
        for (const auto& t : h.torsion) torsion.push_back(t.get_str());
        result["torsion"] = std::move(torsion);
        Value reps = Value::array();
        for (const auto& r : h.representatives) reps.push_back(cochain_value(r));
        result["representatives"] = std::move(reps);
    } else if (verb == "chern") {
        auto cochain = io::parse_cochain(slurp(report, "cochain", cochain_path), nerve,
                                         config.parse_options());
        auto chern = cech::chern_class(cochain, std::max(config.tol, 1e-12));
        result["delta"] = cochain_value(chern.delta);
        Value free = Value::array();
        for (const auto& c : chern.cls.free_part) free.push_back(c.get_str());
        result["freeCoords"] = std::move(free);
        Value torsion = Value::array();
        for (size_t k = 0; k < chern.cls.torsion_part.size(); ++k) {
            Value entry = Value::object();
            entry["coord"] = chern.cls.torsion_part[k].get_str();
            entry["modulus"] = chern.cls.torsion_moduli[k].get_str();
            torsion.push_back(std::move(entry));
        }
        result["torsionCoords"] = std::move(torsion);
        result["zeroClass"] = chern.zero_class;
        auto lift = cech::exp_lift(cochain, std::max(config.tol, 1e-12));
        result["lift"] = lift ? cochain_value(*lift) : Value();
    } else { // moduli
        auto cochain = io::parse_cochain(slurp(report, "cochain", cochain_path), nerve,
                                         config.parse_options());
        auto point = cech::moduli_coordinates(cochain, std::max(config.tol, 1e-12));
        Value coords = Value::array();
        for (auto z : point) coords.push_back(io::complex_value(z));
        result["point"] = std::move(coords);
    }
    report.root["result"] = std::move(result);
    return report.emit(config);
}

int run_localsys(const std::string& verb, const RunConfig& config, const std::string& nerve_path,
                 const std::string& cocycle_path, const std::string& gauge_path, int basepoint) {
    Report report("localsys " + verb, config);
    auto nerve = io::parse_nerve(slurp(report, "nerve", nerve_path));
    auto cocycle = io::parse_cocycle(slurp(report, "cocycle", cocycle_path), nerve,
                                     config.parse_options());
    Value result = Value::object();
    if (verb == "validate") {
        bool ok = localsys::validate_cocycle(cocycle, config.tol);
        result["valid"] = ok;
        report.root["result"] = std::move(result);
        report.check("cocycle condition", ok);
    } else if (verb == "gauge") {
        auto gauge = io::parse_gauge(slurp(report, "gauge", gauge_path), nerve,
                                     config.parse_options());
        auto out = localsys::gauge_act(gauge, cocycle);
        result["cocycle"] = cocycle_value(out);
        report.root["result"] = std::move(result);
        report.check("gauge output is a cocycle", localsys::validate_cocycle(out, config.tol));
    } else { // monodromy
        auto p = localsys::pi1_presentation(nerve->skeleton(), basepoint);
        auto rep = localsys::monodromy(cocycle, p, config.tol);
        result["basepoint"] = basepoint;
        result["generators"] = p.group.generators;
        Value edges = Value::array();
        for (const auto& e : p.generator_edges) {
            Value edge = Value::array();
            edge.push_back(e[0]);
            edge.push_back(e[1]);
            edges.push_back(std::move(edge));
        }
        result["generatorEdges"] = std::move(edges);
        Value images = Value::array();
        for (int g = 1; g <= p.group.generators; ++g)
            images.push_back(io::matrix_value(rep.image(g)));
        result["images"] = std::move(images);
        report.root["result"] = std::move(result);
    }
    return report.emit(config);
}

int run_lattice(const std::string& verb, const RunConfig& config, const std::string& surface_path,
                const std::string& connection_path, const std::string& path_path) {
    Report report("lattice " + verb, config);
    auto surface = io::parse_surface(slurp(report, "surface", surface_path));
    auto conn = io::parse_connection(slurp(report, "connection", connection_path), surface,
                                     config.parse_options());
    Value result = Value::object();
    if (verb == "curvature") {
        auto faces = curvature(conn);
        Value list = Value::array();
        for (int f = 0; f < surface->face_count(); ++f) {
            Value entry = Value::object();
            Value tri = Value::array();
            for (int v : surface->triangles()[static_cast<size_t>(f)]) tri.push_back(v);
            entry["face"] = std::move(tri);
            entry["holonomy"] = io::matrix_value(faces[static_cast<size_t>(f)]);
            list.push_back(std::move(entry));
        }
        result["faces"] = std::move(list);
        result["flat"] = lattice::is_flat(conn, config.tol);
    } else if (verb == "holonomy") {
        auto path = io::parse_edge_path(slurp(report, "path", path_path));
        result["transport"] = io::matrix_value(holonomy(conn, path));
    } else { // moduli
        auto point = lattice::abelian_moduli(conn, config.tol);
        Value coords = Value::array();
        for (const auto& s : point) coords.push_back(io::scalar_value(s));
        result["point"] = std::move(coords);
        // document the loops behind the coordinates
        auto tree = topo::spanning_tree(surface->skeleton(), 0);
        auto basis = topo::homology_basis(surface->skeleton(), tree);
        Value loops = Value::array();
        for (const auto& word : basis.basis_loops) {
            Value path = Value::array();
            for (int v : topo::loop_vertices(surface->skeleton(), tree, word)) path.push_back(v);
            loops.push_back(std::move(path));
        }
        result["loops"] = std::move(loops);
    }
    report.root["result"] = std::move(result);
    return report.emit(config);
}

int run_fuchsian(const std::string& verb, const RunConfig& config, const std::string& system_path,
                 const std::string& a_text, const std::string& b_text, const std::string& c_text,
                 const std::vector<std::string>& lambda_texts) {
    Report report("fuchsian " + verb, config);
    Value result = Value::object();
    if (verb == "monodromy") {
        auto sys = io::parse_fuchsian_system(slurp(report, "system", system_path),
                                             config.parse_options());
        auto m = fuchsian::monodromy(sys, io::parse_complex_literal(config.base_text), config.tol,
                                     config.radius);
        result["C0"] = io::matrix_value(m.c0);
        result["C1"] = io::matrix_value(m.c1);
        result["Cinf"] = io::matrix_value(m.cinf);
        result["productOrder"] = m.product_order;
        result["residualIdentityError"] = m.residual_identity_error;
        result["integrationTolerance"] = m.integration_tolerance;
        result["maxLiouvilleResidual"] = m.max_liouville_residual;
        report.root["result"] = std::move(result);
        report.check("Liouville determinant identity", m.max_liouville_residual < 100 * config.tol);
        auto eig = fuchsian::eigenvalue_check(sys, m, std::max(config.tol * 100, 1e-8));
        Value points = Value::array();
        for (const auto& p : eig.points) {
            Value entry = Value::object();
            entry["point"] = p.point;
            entry["resonant"] = p.resonant;
            entry["maxError"] = p.max_error;
            points.push_back(std::move(entry));
        }
        report.root["eigenvalueCheck"] = std::move(points);
        if (!eig.any_resonant) report.check("monodromy spectrum matches residues", eig.all_passed);
    } else if (verb == "hypergeometric") {
        fuchsian::HypergeometricParams params(io::parse_complex_literal(a_text),
                                              io::parse_complex_literal(b_text),
                                              io::parse_complex_literal(c_text));
        auto sys = fuchsian::hypergeometric_to_system(params);
        result["system"] = system_value(sys);
        Value flags = Value::object();
        flags["cInteger"] = params.c_integer;
        flags["cMinusAMinusBInteger"] = params.c_minus_a_minus_b_integer;
        flags["aMinusBInteger"] = params.a_minus_b_integer;
        result["resonance"] = std::move(flags);
        report.root["result"] = std::move(result);
    } else { // lambda
        auto sys = io::parse_fuchsian_system(slurp(report, "system", system_path),
                                             config.parse_options());
        if (lambda_texts.empty()) raise("SchemaError", "--lambda is required");
        auto rescaled = fuchsian::lambda_rescale(sys, io::parse_complex_literal(lambda_texts[0]));
        result["system"] = system_value(rescaled);
        report.root["result"] = std::move(result);
    }
    return report.emit(config);
}

int run_equiv(const std::string& route, const RunConfig& config, const std::string& nerve_path,
              const std::string& rep_path, const std::string& cocycle_path,
              const std::string& system_path, const std::vector<std::string>& lambda_texts) {
    Report report("equiv " + route, config);
    equivalences::EquivalenceReport r;
    if (route == "betti-cech") {
        auto nerve = io::parse_nerve(slurp(report, "nerve", nerve_path));
        auto p = localsys::pi1_presentation(nerve->skeleton(), 0);
        auto rep = io::parse_representation(slurp(report, "representation", rep_path), p.group,
                                            config.parse_options());
        r = equivalences::roundtrip_betti_cech(rep, nerve, config.tol);
    } else if (route == "cech-lattice") {
        auto nerve = io::parse_nerve(slurp(report, "nerve", nerve_path));
        auto cocycle = io::parse_cocycle(slurp(report, "cocycle", cocycle_path), nerve,
                                         config.parse_options());
        auto surface = std::make_shared<const lattice::TriangulatedSurface>(
            lattice::TriangulatedSurface::from_nerve(*nerve));
        r = equivalences::roundtrip_cech_lattice(cocycle, nerve, surface,
                                                 std::max(config.tol, 1e-12));
    } else { // lambda
        auto sys = io::parse_fuchsian_system(slurp(report, "system", system_path),
                                             config.parse_options());
        std::vector<std::complex<double>> lambdas;
        for (const auto& text : lambda_texts) lambdas.push_back(io::parse_complex_literal(text));
        if (lambdas.empty()) raise("SchemaError", "--lambda is required");
        r = equivalences::lambda_equivalence(sys, lambdas, config.tol);
    }
    report.root["result"] = equivalence_value(r);
    report.check("round trip preserves the orbit invariants", r.passed);
    return report.emit(config);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moduli constructions for flat bundles: Betti, Cech, lattice and Fuchsian sides"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--tol", config.tol, "numeric tolerance (ignored in exact mode)");
    app.add_option("--mode", config.mode, "arithmetic mode: exact or float");
    app.add_option("--output", config.output, "write the report to a file instead of stdout");

    std::string group_path, rep_path, words_path, nerve_path, cochain_path, cocycle_path;
    std::string gauge_path, surface_path, connection_path, path_path, system_path;
    std::string a_text = "0", b_text = "0", c_text = "0";
    std::vector<std::string> lambda_texts;
    int degree = 1;
    int basepoint = 0;

    // betti
    CLI::App* betti_cmd = app.add_subcommand("betti", "representation variety operations");
    betti_cmd->require_subcommand(1);
    for (const char* verb : {"check", "traces", "reductivity"}) {
        CLI::App* sub = betti_cmd->add_subcommand(verb);
        sub->add_option("--group", group_path)->required();
        sub->add_option("--rep", rep_path)->required();
        if (std::string(verb) == "traces") sub->add_option("--words", words_path);
    }

    // cech
    CLI::App* cech_cmd = app.add_subcommand("cech", "Cech cohomology and the exponential sequence");
    cech_cmd->require_subcommand(1);
    {
        CLI::App* sub = cech_cmd->add_subcommand("cohomology");
        sub->add_option("--nerve", nerve_path)->required();
        sub->add_option("--degree", degree);
        sub->add_option("--coefficients", config.coefficients, "Z or C");
        for (const char* verb : {"chern", "moduli"}) {
            CLI::App* other = cech_cmd->add_subcommand(verb);
            other->add_option("--nerve", nerve_path)->required();
            other->add_option("--cochain", cochain_path)->required();
        }
    }

    // localsys
    CLI::App* localsys_cmd = app.add_subcommand("localsys", "locally constant cocycles");
    localsys_cmd->require_subcommand(1);
    for (const char* verb : {"validate", "gauge", "monodromy"}) {
        CLI::App* sub = localsys_cmd->add_subcommand(verb);
        sub->add_option("--nerve", nerve_path)->required();
        sub->add_option("--cocycle", cocycle_path)->required();
        if (std::string(verb) == "gauge") sub->add_option("--gauge", gauge_path)->required();
        if (std::string(verb) == "monodromy") sub->add_option("--basepoint", basepoint);
    }

    // lattice
    CLI::App* lattice_cmd = app.add_subcommand("lattice", "discrete connections on surfaces");
    lattice_cmd->require_subcommand(1);
    for (const char* verb : {"curvature", "holonomy", "moduli"}) {
        CLI::App* sub = lattice_cmd->add_subcommand(verb);
        sub->add_option("--surface", surface_path)->required();
        sub->add_option("--connection", connection_path)->required();
        if (std::string(verb) == "holonomy") sub->add_option("--path", path_path)->required();
    }

    // fuchsian
    CLI::App* fuchsian_cmd = app.add_subcommand("fuchsian", "numerical monodromy of Fuchsian systems");
    fuchsian_cmd->require_subcommand(1);
    {
        CLI::App* sub = fuchsian_cmd->add_subcommand("monodromy");
        sub->add_option("--system", system_path)->required();
        sub->add_option("--base", config.base_text);
        sub->add_option("--radius", config.radius);
        CLI::App* hyper = fuchsian_cmd->add_subcommand("hypergeometric");
        hyper->add_option("--a", a_text)->required();
        hyper->add_option("--b", b_text)->required();
        hyper->add_option("--c", c_text)->required();
        CLI::App* lam = fuchsian_cmd->add_subcommand("lambda");
        lam->add_option("--system", system_path)->required();
        lam->add_option("--lambda", lambda_texts)->required();
    }

    // equiv
    CLI::App* equiv_cmd = app.add_subcommand("equiv", "cross-construction round trips");
    equiv_cmd->require_subcommand(1);
    {
        CLI::App* bc = equiv_cmd->add_subcommand("betti-cech");
        bc->add_option("--nerve", nerve_path)->required();
        bc->add_option("--rep", rep_path)->required();
        CLI::App* cl = equiv_cmd->add_subcommand("cech-lattice");
        cl->add_option("--nerve", nerve_path)->required();
        cl->add_option("--cocycle", cocycle_path)->required();
        CLI::App* lam = equiv_cmd->add_subcommand("lambda");
        lam->add_option("--system", system_path)->required();
        lam->add_option("--lambda", lambda_texts)->required();
    }

    // Global flags may appear after the subcommand: unmatched arguments
    // climb back up to the main app.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) allow_fallthrough(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti_cmd->parsed())
            return run_betti(betti_cmd->get_subcommands().front()->get_name(), config, group_path,
                             rep_path, words_path);
        if (cech_cmd->parsed())
            return run_cech(cech_cmd->get_subcommands().front()->get_name(), config, nerve_path,
                            cochain_path, degree);
        if (localsys_cmd->parsed())
            return run_localsys(localsys_cmd->get_subcommands().front()->get_name(), config,
                                nerve_path, cocycle_path, gauge_path, basepoint);
        if (lattice_cmd->parsed())
            return run_lattice(lattice_cmd->get_subcommands().front()->get_name(), config,
                               surface_path, connection_path, path_path);
        if (fuchsian_cmd->parsed())
            return run_fuchsian(fuchsian_cmd->get_subcommands().front()->get_name(), config,
                                system_path, a_text, b_text, c_text, lambda_texts);
        if (equiv_cmd->parsed())
            return run_equiv(equiv_cmd->get_subcommands().front()->get_name(), config, nerve_path,
                             rep_path, cocycle_path, system_path, lambda_texts);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == "SchemaError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
