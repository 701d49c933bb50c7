#include "troplie/jsonio.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace troplie;

namespace {

enum ExitCode { Ok = 0, ParseError = 1, EmptyCone = 2, RealityFailure = 3, VerifyFailure = 4 };

void emit(const std::string& path, const Json& j) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(path, j);
}

GroupFamily family_of(const std::string& name) {
    if (name == "bplus") return GroupFamily::BPlus;
    if (name == "gstar0") return GroupFamily::GStar0;
    if (name == "gstar") return GroupFamily::GStar;
    throw std::runtime_error("unknown family '" + name + "' (expected bplus|gstar0|gstar)");
}

void check_group_range(int n, GroupFamily family) {
    int cap = family == GroupFamily::GStar ? 4 : 6;
    if (n < 1 || n > cap)
        throw std::runtime_error("n out of range (1.." + std::to_string(cap) +
                                 " for this family)");
}

int cmd_tropicalize(const std::string& input, const std::string& cone_out,
                    const std::string& bracket_out, bool reduce) {
    PoissonStructure P = spec_from_json(load_json_file(input));
    StrictCone cone = tropical_cone(P);
    if (cone_is_empty(cone)) {
        std::cerr << "empty cone\n";
        return EmptyCone;
    }
    if (TropicalCoordinates::of(P.registry()).is_complex_case()) {
        auto reality = check_reality(P);
        if (!reality.passed) {
            for (const auto& f : reality.failures) std::cerr << "reality: " << f << "\n";
            return RealityFailure;
        }
    }
    if (reduce && !cone.normals.empty()) cone = cone_remove_redundant(cone);
    cone.coords = TropicalCoordinates::of(P.registry()).cone_names();
    emit(cone_out, cone_to_json(cone));
    emit(bracket_out, bracket_to_json(constant_bracket(P)));
    return Ok;
}

int cmd_group(int n, const std::string& family, const std::string& out) {
    GroupFamily f = family_of(family);
    check_group_range(n, f);
    emit(out, spec_to_json(assemble(n, f)));
    return Ok;
}

int cmd_verify_gz(int n, const std::string& json_out) {
    if (n < 2 || n > 4) throw std::runtime_error("n out of range (2..4)");
    auto rep = verify_gz(n);
    for (const auto& [name, ok] : rep.checks)
        std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    std::cout << (rep.passed ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
    emit(json_out, report_to_json(rep));
    return rep.passed ? Ok : VerifyFailure;
}

int cmd_jacobi(int n, const std::string& family, const std::string& json_out) {
    GroupFamily f = family_of(family);
    check_group_range(n, f);
    if (f == GroupFamily::GStar && n > 3)
        throw std::runtime_error("n out of range (2..3 for gstar jacobi)");
    PoissonStructure P = assemble(n, f);
    int nv = P.registry()->size(), triples = 0;
    VerifyGZReport rep;
    bool all_zero = true;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            for (int w = v + 1; w < nv; ++w) {
                ++triples;
                if (!jacobiator(P, u, v, w).is_zero()) {
                    all_zero = false;
                    rep.failures.push_back("nonzero jacobiator on (" + P.registry()->name(u) +
                                           ", " + P.registry()->name(v) + ", " +
                                           P.registry()->name(w) + ")");
                }
            }
    rep.record("jacobiator vanishes on all " + std::to_string(triples) + " triples", all_zero);
    std::cout << "jacobi " << family << " n=" << n << ": " << (all_zero ? "PASS" : "FAIL")
              << " (" << triples << " triples)\n";
    emit(json_out, report_to_json(rep));
    return all_zero ? Ok : VerifyFailure;
}

int cmd_limit_sample(int n, const std::vector<double>& ts) {
    if (n < 2 || n > 4) throw std::runtime_error("n out of range (2..4)");
    PoissonStructure P = assemble(n, GroupFamily::GStar);
    StrictCone cone = tropical_cone(P);
    auto eta = cone_interior_sample(cone);
    auto tc = TropicalCoordinates::of(P.registry());
    int nphis = static_cast<int>(tc.coords.size()) - tc.cone_dim;
    std::vector<double> phis;
    for (int a = 0; a < nphis; ++a) phis.push_back(0.3 + 0.05 * a);
    std::cout << limit_sample(P, eta, phis, ts).csv();
    return Ok;
}

int cmd_lindstrom(const std::string& path, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    auto [net, w] = network_from_json(load_json_file(path));
    if (rows.size() != cols.size() || rows.empty())
        throw std::runtime_error("--rows and --cols must be nonempty and equally sized");
    std::cout << minor_lindstrom(net, w, rows, cols).str() << "\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropicalization of Poisson structures and the Gelfand-Zeitlin example"};
    app.require_subcommand(1);

    std::string input, cone_out, bracket_out, out, json_out, family = "gstar", network;
    bool reduce = false;
    int n = 2;
    std::vector<double> ts = {2.0, 5.0, 10.0, 20.0};
    std::vector<int> rows, cols;

    auto* trop = app.add_subcommand("tropicalize", "cone and constant bracket of a spec file");
    trop->add_option("input", input, "bracket spec JSON file")->required();
    trop->add_option("--cone-out", cone_out, "cone JSON output path (default stdout)");
    trop->add_option("--bracket-out", bracket_out, "bracket JSON output path (default stdout)");
    trop->add_flag("--reduce", reduce, "remove redundant cone normals");

    auto* grp = app.add_subcommand("group", "assemble a group bracket as a spec file");
    grp->add_option("--n", n, "matrix size")->required();
    grp->add_option("--family", family, "bplus|gstar0|gstar")->required();
    grp->add_option("--out", out, "output path (default stdout)");

    auto* ver = app.add_subcommand("verify-gz", "Gelfand-Zeitlin verification for G*");
    ver->add_option("--n", n, "matrix size")->required();
    ver->add_option("--json-out", json_out, "report JSON output path (default stdout)");

    auto* jac = app.add_subcommand("jacobi", "check the Jacobi identity on all triples");
    jac->add_option("--n", n, "matrix size")->required();
    jac->add_option("--family", family, "bplus|gstar0|gstar")->required();
    jac->add_option("--json-out", json_out, "report JSON output path (default stdout)");

    auto* lim = app.add_subcommand("limit-sample", "scaling-limit deviation table for G*");
    lim->add_option("--n", n, "matrix size")->required();
    lim->add_option("--t", ts, "sample values of t")->delimiter(',');

    auto* lin = app.add_subcommand("lindstrom", "path-system minor of a planar network");
    lin->add_option("--network", network, "network JSON file")->required();
    lin->add_option("--rows", rows, "source ports")->required()->delimiter(',');
    lin->add_option("--cols", cols, "sink ports")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseError;
    }

    try {
        if (trop->parsed()) return cmd_tropicalize(input, cone_out, bracket_out, reduce);
        if (grp->parsed()) return cmd_group(n, family, out);
        if (ver->parsed()) return cmd_verify_gz(n, json_out);
        if (jac->parsed()) return cmd_jacobi(n, family, json_out);
        if (lim->parsed()) return cmd_limit_sample(n, ts);
        if (lin->parsed()) return cmd_lindstrom(network, rows, cols);
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return ParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ParseError;
    }
    return ParseError;
}
