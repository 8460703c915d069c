#include "conesparse/json_io.hpp"

#include <cmath>
#include <fstream>

namespace conesparse {

namespace {

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a numeric array");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ParseError("expected a numeric array");
        v[i] = j[i].get<double>();
    }
    return v;
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
    return j;
}

int require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(std::string("cone spec needs integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

} // namespace

ConeHandle cone_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ParseError("cone spec needs a \"type\" string");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "orthant") return make_orthant(require_int(j, "n"));
    if (type == "psd") return make_psd(require_int(j, "d"));
    if (type == "soc") return make_second_order(require_int(j, "n"));
    if (type == "spectral_epigraph") {
        SpectralBarrier variant = SpectralBarrier::Hyperbolic;
        if (j.contains("barrier")) {
            const std::string b = j["barrier"].get<std::string>();
            if (b == "k_plus_1") {
                variant = SpectralBarrier::KPlusOne;
            } else if (b != "hyperbolic") {
                throw ParseError("unknown spectral barrier \"" + b + "\"");
            }
        }
        return make_spectral_epigraph(require_int(j, "n"), require_int(j, "k"), variant);
    }
    if (type == "product") {
        if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
            throw ParseError("product cone needs a non-empty \"parts\" array");
        }
        std::vector<ConeHandle> parts;
        for (const auto& p : j["parts"]) parts.push_back(cone_from_json(p));
        return make_product(std::move(parts));
    }
    throw ParseError("unknown cone type \"" + type + "\"");
}

Json cone_to_json(const Cone& cone) {
    Json j;
    switch (cone.kind()) {
    case ConeKind::Orthant:
        j["type"] = "orthant";
        j["n"] = static_cast<const OrthantCone&>(cone).n();
        break;
    case ConeKind::Psd:
        j["type"] = "psd";
        j["d"] = static_cast<const PsdCone&>(cone).d();
        break;
    case ConeKind::SecondOrder:
        j["type"] = "soc";
        j["n"] = static_cast<const SecondOrderCone&>(cone).n();
        break;
    case ConeKind::SpectralEpigraph: {
        const auto& c = static_cast<const SpectralEpigraphCone&>(cone);
        j["type"] = "spectral_epigraph";
        j["n"] = c.n();
        j["k"] = c.k();
        j["barrier"] = c.variant() == SpectralBarrier::Hyperbolic ? "hyperbolic" : "k_plus_1";
        break;
    }
    case ConeKind::Product: {
        j["type"] = "product";
        j["parts"] = Json::array();
        for (const auto& p : static_cast<const ProductCone&>(cone).parts()) {
            j["parts"].push_back(cone_to_json(*p));
        }
        break;
    }
    }
    return j;
}

SparsificationInstance instance_from_json(const Json& j, std::optional<double> eps_override) {
    if (!j.is_object()) throw ParseError("instance document must be an object");
    if (!j.contains("cone")) throw ParseError("instance document needs a \"cone\"");
    ConeHandle cone = cone_from_json(j["cone"]);
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
        throw ParseError("instance document needs a non-empty \"elements\" array");
    }
    std::vector<ConeElement> elements;
    for (const auto& row : j["elements"]) {
        elements.emplace_back(cone->shape(), vec_from_json(row));
    }
    double eps = 0.0;
    if (eps_override) {
        eps = *eps_override;
    } else if (j.contains("epsilon") && j["epsilon"].is_number()) {
        eps = j["epsilon"].get<double>();
    } else {
        throw ParseError("epsilon missing: provide it in the document or on the command line");
    }
    if (j.contains("target")) {
        ConeElement target(cone->shape(), vec_from_json(j["target"]));
        return SparsificationInstance(std::move(cone), std::move(elements), eps, std::move(target));
    }
    return SparsificationInstance(std::move(cone), std::move(elements), eps);
}

Json instance_to_json(const SparsificationInstance& inst) {
    Json j;
    j["cone"] = cone_to_json(inst.cone());
    j["epsilon"] = inst.epsilon();
    j["elements"] = Json::array();
    for (const auto& x : inst.elements()) j["elements"].push_back(vec_to_json(x.coords()));
    j["target"] = vec_to_json(inst.target().coords());
    return j;
}

Json certificate_to_json(const SandwichCertificate& cert) {
    return Json{{"pass", cert.pass},
                {"lower_slack", cert.lower_slack},
                {"upper_slack", cert.upper_slack},
                {"achieved_eps", cert.achieved_eps},
                {"epsilon", cert.epsilon}};
}

Json result_to_json(const SparsifierResult& result, const SandwichCertificate& cert) {
    Json j;
    j["support"] = result.support;
    j["weights"] = result.weights;
    j["achieved_eps"] = result.achieved_eps;
    j["bound"] = result.bound;
    j["iterations"] = result.iterations;
    j["certificate"] = certificate_to_json(cert);
    return j;
}

SparsifierResult result_from_json(const Json& j) {
    SparsifierResult r;
    if (!j.is_object() || !j.contains("support") || !j.contains("weights")) {
        throw ParseError("result document needs \"support\" and \"weights\"");
    }
    r.support = j["support"].get<std::vector<int>>();
    r.weights = j["weights"].get<std::vector<double>>();
    if (j.contains("achieved_eps")) r.achieved_eps = j["achieved_eps"].get<double>();
    if (j.contains("bound")) r.bound = j["bound"].get<long long>();
    if (j.contains("iterations")) r.iterations = j["iterations"].get<long long>();
    return r;
}

Json law_report_to_json(const LawReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back(Json{{"law", c.law},
                              {"max_violation", c.max_violation},
                              {"tolerance", c.tolerance},
                              {"samples", c.samples},
                              {"pass", c.pass()}});
    }
    return Json{{"pass", report.pass()}, {"checks", checks}};
}

PackCoverInstance packcover_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("pack/cover document must be an object");
    if (!j.contains("cone")) throw ParseError("pack/cover document needs a \"cone\"");
    ConeHandle cone = cone_from_json(j["cone"]);
    if (!j.contains("a") || !j["a"].is_array() || j["a"].empty()) {
        throw ParseError("pack/cover document needs a non-empty \"a\" array");
    }
    std::vector<ConeElement> a;
    for (const auto& row : j["a"]) a.emplace_back(cone->shape(), vec_from_json(row));
    if (!j.contains("b") || !j.contains("c")) {
        throw ParseError("pack/cover document needs \"b\" and \"c\"");
    }
    Vec b = vec_from_json(j["b"]);
    ConeElement c(cone->shape(), vec_from_json(j["c"]));
    return PackCoverInstance(std::move(cone), std::move(a), std::move(b), std::move(c));
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void write_trace_jsonl(const std::string& path, const std::vector<TraceRow>& trace) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (const auto& row : trace) {
        Json j{{"t", row.t}};
        if (row.chosen >= 0) j["chosen"] = row.chosen;
        if (!std::isnan(row.step)) j["step"] = row.step;
        if (!std::isnan(row.u_shift)) j["u"] = row.u_shift;
        if (!std::isnan(row.ell_shift)) j["ell"] = row.ell_shift;
        if (!std::isnan(row.phi_upper)) j["phi_upper"] = row.phi_upper;
        if (!std::isnan(row.phi_lower)) j["phi_lower"] = row.phi_lower;
        if (!std::isnan(row.objective)) j["objective"] = row.objective;
        out << j.dump() << "\n";
    }
}

} // namespace conesparse
