#include "troplie/jsonio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace troplie {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error(what); }

long long small_int(const Integer& v) { return v.convert_to<long long>(); }

}  // namespace

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_str(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) bad("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        bad("malformed rational '" + s + "'");
    }
}

Json coeff_to_json(const GaussianRational& c) {
    return Json{{"re", rational_str(c.re)}, {"im", rational_str(c.im)}};
}

GaussianRational coeff_from_json(const Json& j) {
    GaussianRational c;
    c.re = rational_from_str(j.at("re").get<std::string>());
    c.im = rational_from_str(j.at("im").get<std::string>());
    return c;
}

Json spec_to_json(const PoissonStructure& P) {
    const auto& reg = *P.registry();
    Json vars = Json::array();
    for (int i = 0; i < reg.size(); ++i) {
        if (reg.var(i).kind == VarKind::Conjugate) continue;
        vars.push_back({{"name", reg.name(i)},
                        {"kind", reg.is_real(i) ? "real" : "complex"}});
    }
    Json brackets = Json::array();
    for (const auto& [pair, poly] : P.table()) {
        if (poly.is_zero()) continue;
        Json terms = Json::array();
        for (const auto& [m, c] : poly.terms()) {
            Json exps = Json::object();
            for (int i = 0; i < reg.size(); ++i)
                if (m.exps[i] != 0) exps[reg.name(i)] = m.exps[i];
            terms.push_back({{"coeff", coeff_to_json(c)}, {"exponents", exps}});
        }
        brackets.push_back({{"lhs", reg.name(pair.first)},
                            {"rhs", reg.name(pair.second)},
                            {"poly", terms}});
    }
    return Json{{"variables", vars}, {"brackets", brackets}};
}

PoissonStructure spec_from_json(const Json& j) {
    auto reg = std::make_shared<VarRegistry>();
    for (const auto& v : j.at("variables")) {
        std::string name = v.at("name").get<std::string>();
        std::string kind = v.at("kind").get<std::string>();
        if (name.empty() || name[0] == '~') bad("bad variable name '" + name + "'");
        if (kind == "real")
            reg->add_real(name);
        else if (kind == "complex")
            reg->add_complex_pair(name);
        else
            bad("unknown variable kind '" + kind + "'");
    }
    RegistryPtr creg = reg;
    PoissonStructure P(creg);
    int nv = creg->size();
    for (const auto& b : j.at("brackets")) {
        int u = creg->find(b.at("lhs").get<std::string>());
        int v = creg->find(b.at("rhs").get<std::string>());
        if (u < 0 || v < 0) bad("bracket references unknown variable");
        if (u == v) bad("diagonal bracket {x, x} is not allowed");
        LaurentPoly poly = LaurentPoly::zero(creg);
        for (const auto& t : b.at("poly")) {
            Monomial m(nv);
            for (const auto& [name, e] : t.at("exponents").items()) {
                int idx = creg->find(name);
                if (idx < 0) bad("exponent references unknown variable '" + name + "'");
                m.exps[idx] = e.get<int>();
            }
            poly.add_term(m, coeff_from_json(t.at("coeff")));
        }
        P.set_bracket(u, v, poly);
    }
    return P;
}

Json cone_to_json(const StrictCone& c) {
    Json normals = Json::array();
    for (const auto& n : c.normals) {
        Json row = Json::array();
        for (const auto& x : n) row.push_back(small_int(x));
        normals.push_back(row);
    }
    return Json{{"dimension", c.dim}, {"coordinates", c.coords}, {"normals", normals}};
}

StrictCone cone_from_json(const Json& j) {
    StrictCone c(j.at("dimension").get<int>(),
                 j.at("coordinates").get<std::vector<std::string>>());
    for (const auto& row : j.at("normals")) {
        IntVec n;
        for (const auto& x : row) n.push_back(Integer(x.get<long long>()));
        if (static_cast<int>(n.size()) != c.dim) bad("normal has wrong dimension");
        c.add_normal(n);
    }
    return c;
}

Json bracket_to_json(const ConstantBracket& cb) {
    Json names = Json::array();
    for (const auto& c : cb.coords.coords) names.push_back(c.name);
    Json matrix = Json::array();
    for (const auto& row : cb.matrix) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rational_str(x));
        matrix.push_back(r);
    }
    return Json{{"coordinates", names}, {"matrix", matrix}};
}

std::pair<std::vector<std::string>, std::vector<std::vector<Rational>>> bracket_from_json(
    const Json& j) {
    auto names = j.at("coordinates").get<std::vector<std::string>>();
    std::vector<std::vector<Rational>> matrix;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(rational_from_str(x.get<std::string>()));
        if (r.size() != names.size()) bad("bracket matrix is not square");
        matrix.push_back(r);
    }
    if (matrix.size() != names.size()) bad("bracket matrix is not square");
    return {names, matrix};
}

std::pair<PlanarNetwork, Weighting> network_from_json(const Json& j) {
    PlanarNetwork net;
    net.nports = j.at("ports").get<int>();
    net.nvertices = j.at("vertices").get<int>();
    net.sources = j.at("sources").get<std::vector<int>>();
    net.sinks = j.at("sinks").get<std::vector<int>>();

    std::set<std::string> names;
    for (const auto& e : j.at("edges"))
        if (e.contains("weight") && !e.at("weight").is_null())
            names.insert(e.at("weight").get<std::string>());
    net.weight_names.assign(names.begin(), names.end());
    auto slot_of = [&](const std::string& name) {
        auto it = std::find(net.weight_names.begin(), net.weight_names.end(), name);
        return static_cast<int>(it - net.weight_names.begin());
    };
    for (const auto& e : j.at("edges")) {
        PlanarNetwork::Edge edge;
        edge.from = e.at("from").get<int>();
        edge.to = e.at("to").get<int>();
        if (e.contains("weight") && !e.at("weight").is_null())
            edge.slot = slot_of(e.at("weight").get<std::string>());
        net.edges.push_back(edge);
    }
    net.finalize();

    Weighting w;
    if (j.contains("weights")) {
        auto reg = std::make_shared<VarRegistry>();
        RegistryPtr creg = reg;
        const auto& table = j.at("weights");
        for (const auto& name : net.weight_names) {
            if (!table.contains(name)) bad("missing weight value for '" + name + "'");
            Rational v = rational_from_str(table.at(name).get<std::string>());
            if (v == 0) bad("weight '" + name + "' must be nonzero");
            w.push_back(LaurentPoly::constant(creg, GaussianRational(v)));
        }
    } else {
        auto [reg, symbolic] = symbolic_weighting(net);
        w = std::move(symbolic);
    }
    return {std::move(net), std::move(w)};
}

Json report_to_json(const VerifyGZReport& rep) {
    Json checks = Json::array();
    for (const auto& [name, ok] : rep.checks)
        checks.push_back({{"name", name}, {"passed", ok}});
    return Json{{"passed", rep.passed}, {"checks", checks}, {"failures", rep.failures}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace troplie
