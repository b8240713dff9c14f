#include "ratapprox/json_io.hpp"

namespace ratapprox {

namespace {

nlohmann::ordered_json fraction_json(const Fraction& f) {
    return {{"num", f.num().get_str()}, {"den", f.den().get_str()}};
}

Int parse_int(const nlohmann::ordered_json& j, const char* key) {
    try {
        return Int(j.at(key).get<std::string>());
    } catch (const std::invalid_argument&) {
        throw std::domain_error(std::string("decomposition_from_json: bad integer in '") + key +
                                "'");
    }
}

}  // namespace

nlohmann::ordered_json decomposition_json(const ProblemSpec& spec, const Decomposition& d) {
    nlohmann::ordered_json j;
    j["a"] = spec.a.get_str();
    j["q"] = spec.q.get_str();
    j["Q"] = spec.Q.get_str();
    j["n"] = spec.n;
    j["c"] = spec.c.str();
    j["path"] = to_string(d.path);
    j["terms"] = nlohmann::ordered_json::array();
    for (const Term& t : d.terms)
        j["terms"].push_back({{"num", t.num.get_str()}, {"den", t.den.get_str()}});
    j["b"] = d.b.get_str();
    j["product"] = d.product.get_str();
    j["error"] = fraction_json(d.error);
    j["hypothesis_Q_ge_q2eps"] = d.hypothesis_ok;
    return j;
}

ParsedDecomposition decomposition_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("decomposition_from_json: ") + e.what());
    }
    try {
        ParsedDecomposition parsed;
        parsed.spec.a = parse_int(j, "a");
        parsed.spec.q = parse_int(j, "q");
        parsed.spec.Q = parse_int(j, "Q");
        parsed.spec.n = j.at("n").get<int>();
        parsed.spec.c = Fraction::parse(j.at("c").get<std::string>());
        parsed.decomposition.path = parse_path(j.at("path").get<std::string>());
        for (const auto& t : j.at("terms")) {
            Term term;
            term.num = Int(t.at("num").get<std::string>());
            term.den = Int(t.at("den").get<std::string>());
            if (term.den < 1)
                throw std::domain_error("decomposition_from_json: term denominator < 1");
            parsed.decomposition.terms.push_back(std::move(term));
        }
        parsed.decomposition.b = parse_int(j, "b");
        parsed.decomposition.product = parse_int(j, "product");
        parsed.decomposition.error =
            Fraction(Int(j.at("error").at("num").get<std::string>()),
                     Int(j.at("error").at("den").get<std::string>()));
        parsed.decomposition.hypothesis_ok = j.at("hypothesis_Q_ge_q2eps").get<bool>();
        return parsed;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("decomposition_from_json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(std::string("decomposition_from_json: ") + e.what());
    }
}

nlohmann::ordered_json verification_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["denominator_bound_ok"] = report.denominator_bound_ok;
    j["pairwise_coprime_ok"] = report.pairwise_coprime_ok;
    j["error_identity_ok"] = report.error_identity_ok;
    j["error_budget_ok"] = report.error_budget_ok;
    j["product_min_ok"] = report.product_min_ok;
    j["congruence_ok"] = report.congruence_ok;
    j["all_ok"] = report.all_ok();
    return j;
}

nlohmann::ordered_json oracle_json(const Int& a, const Int& q, int n, const Int& D,
                                   const OracleResult& result) {
    nlohmann::ordered_json j;
    j["a"] = a.get_str();
    j["q"] = q.get_str();
    j["n"] = n;
    j["D"] = D.get_str();
    j["best_error"] = fraction_json(result.best_error);
    j["witness"] = nlohmann::ordered_json::array();
    for (const Term& t : result.witness)
        j["witness"].push_back({{"num", t.num.get_str()}, {"den", t.den.get_str()}});
    j["enumerated"] = result.enumerated;
    return j;
}

}  // namespace ratapprox
