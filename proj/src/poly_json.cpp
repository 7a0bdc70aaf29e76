#include "altgamma/poly_json.hpp"

namespace altgamma {

nlohmann::json poly_to_json(const Poly& p) {
    auto var_set = p.variables();
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> exp;
        exp.reserve(vars.size());
        for (const auto& v : vars) exp.push_back(m.exponent(v));
        terms.push_back({{"exp", exp}, {"coef", c.str()}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    const auto& vars = j.at("vars");
    Poly p;
    for (const auto& t : j.at("terms")) {
        const auto& exp = t.at("exp");
        if (exp.size() != vars.size())
            throw std::invalid_argument("poly_from_json: exp length does not match vars");
        std::map<std::string, unsigned> exps;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            unsigned e = exp[i].get<unsigned>();
            if (e) exps[vars[i].get<std::string>()] = e;
        }
        p += Poly::term(Monomial(std::move(exps)), Rational::parse(t.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace altgamma
