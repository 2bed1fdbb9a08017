#include "ela/serialize.hpp"

#include "ela/errors.hpp"

namespace ela {

namespace {

Json terms(const SparseVec& v) {
    Json a = Json::array();
    for (const auto& [k, c] : v) a.push_back(Json::array({k, to_string(c)}));
    return a;
}

}  // namespace

Json to_json(const StructureTable& t) {
    Json j;
    j["schema"] = kSchema;
    j["diagram"] = t.diagram.name();
    j["provenance"] = provenance_name(t.provenance);
    j["dimension"] = t.size();
    Json basis = Json::array();
    for (const auto& w : t.words) basis.push_back(format_tree(t.diagram, w));
    j["basis"] = basis;
    Json consts = Json::array();
    for (int a = 0; a < t.size(); ++a)
        for (int b = a + 1; b < t.size(); ++b)
            if (!t.at(a, b).empty()) consts.push_back(Json{{"a", a}, {"b", b}, {"terms", terms(t.at(a, b))}});
    j["constants"] = consts;
    return j;
}

Json to_json(const Representation& rho) {
    Json j;
    j["schema"] = kSchema;
    j["diagram"] = rho.diagram.name();
    j["dim"] = rho.dim;
    Json imgs = Json::array();
    for (std::size_t k = 0; k < rho.images.size(); ++k) {
        Json tr = Json::array();
        for (const auto& [r, c, v] : rho.images[k].triplets()) tr.push_back(Json::array({r, c, to_string(v)}));
        imgs.push_back(Json{{"node", node_label(rho.diagram, static_cast<int>(k))}, {"triplets", tr}});
    }
    j["images"] = imgs;
    return j;
}

Json to_json(const Certificate& c) {
    Json j;
    j["schema"] = kSchema;
    j["claim"] = c.claim;
    j["diagram"] = make_diagram(c.family, c.rank).name();
    j["overall"] = c.overall();
    Json checks = Json::array();
    for (const auto& k : c.checks) checks.push_back(Json{{"name", k.name}, {"pass", k.pass}, {"witness", k.witness}});
    j["checks"] = checks;
    Json vals = Json::object();
    for (const auto& [k, v] : c.values) vals[k] = v;
    j["values"] = vals;
    return j;
}

StructureTable table_from_json(const Json& j) {
    try {
        if (j.at("schema").get<int>() != kSchema) throw ParseError("unsupported schema");
        const std::string name = j.at("diagram").get<std::string>();
        if (name.size() < 2) throw ParseError("bad diagram name");
        const auto d = make_diagram(parse_family(name.substr(0, 1)), std::stoi(name.substr(1)));
        const std::string prov = j.at("provenance").get<std::string>();
        StructureTable t = empty_table(
            d, prov == provenance_name(Provenance::ClosureDerived) ? Provenance::ClosureDerived : Provenance::RepDerived);
        const auto& basis = j.at("basis");
        if (basis.size() != t.words.size()) throw BasisMismatch("basis size differs from |positive roots|");
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!(parse_tree(d, basis[k].get<std::string>()) == t.words[k]))
                throw BasisMismatch("basis word " + std::to_string(k) + " is not the spanning word");
        for (const auto& e : j.at("constants")) {
            const int a = e.at("a").get<int>(), b = e.at("b").get<int>();
            if (a < 0 || b < 0 || a >= t.size() || b >= t.size()) throw ParseError("index out of range");
            SparseVec v;
            for (const auto& term : e.at("terms"))
                sv::axpy(v, parse_rational(term.at(1).get<std::string>()), sv::unit(term.at(0).get<int>()));
            t.constants[a][b] = v;
            t.constants[b][a] = sv::scaled(v, -1);
        }
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ela
