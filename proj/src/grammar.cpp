#include "altgamma/grammar.hpp"

#include <stdexcept>

#include "altgamma/expr.hpp"

namespace altgamma {

Grammar::Grammar(std::vector<std::string> alphabet, std::map<std::string, Poly> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    for (const auto& v : alphabet_)
        if (!rules_.count(v))
            throw std::invalid_argument("grammar: letter '" + v + "' has no rule");
    if (rules_.size() != alphabet_.size())
        throw std::invalid_argument("grammar: rule for a letter outside the alphabet");
    for (const auto& [v, rhs] : rules_)
        for (const auto& w : rhs.variables())
            if (!rules_.count(w))
                throw std::invalid_argument("grammar: rule for '" + v + "' uses unknown letter '" +
                                            w + "'");
}

const Poly& Grammar::rule(const std::string& v) const {
    auto it = rules_.find(v);
    if (it == rules_.end()) throw std::invalid_argument("grammar: unknown letter '" + v + "'");
    return it->second;
}

const Grammar& builtin_grammar(BuiltinGrammar which) {
    static const auto make = [](std::vector<std::pair<std::string, std::string>> rules) {
        std::vector<std::string> alphabet;
        std::map<std::string, Poly> map;
        for (auto& [v, rhs] : rules) {
            alphabet.push_back(v);
            map.emplace(v, parse_poly(rhs));
        }
        return Grammar(std::move(alphabet), std::move(map));
    };
    static const Grammar dumont = make({{"x", "x*y"}, {"y", "x*y"}});
    static const Grammar type_b = make({{"x", "x*y^2"}, {"y", "x^2*y"}});
    static const Grammar g1 =
        make({{"e", "e*(x+y)"}, {"x", "(x^2+y^2)/2"}, {"y", "(x^2+y^2)/2"}});
    static const Grammar g2 = make({{"e", "e*(x+y)"}, {"x", "x^2+y^2"}, {"y", "x^2+y^2"}});
    static const Grammar g3 = make({{"e", "e*a"}, {"a", "2*a^2-4*b"}, {"b", "a^3-2*a*b"}});
    switch (which) {
        case BuiltinGrammar::dumont: return dumont;
        case BuiltinGrammar::type_b: return type_b;
        case BuiltinGrammar::g1: return g1;
        case BuiltinGrammar::g2: return g2;
        case BuiltinGrammar::g3: return g3;
    }
    throw std::logic_error("builtin_grammar: unhandled enumerator");
}

const Grammar& builtin_grammar(const std::string& name) {
    if (name == "dumont") return builtin_grammar(BuiltinGrammar::dumont);
    if (name == "typeB") return builtin_grammar(BuiltinGrammar::type_b);
    if (name == "g1") return builtin_grammar(BuiltinGrammar::g1);
    if (name == "g2") return builtin_grammar(BuiltinGrammar::g2);
    if (name == "g3") return builtin_grammar(BuiltinGrammar::g3);
    throw std::invalid_argument("unknown builtin grammar '" + name + "'");
}

Grammar parse_grammar(std::string_view literal) {
    std::vector<std::string> alphabet;
    std::map<std::string, Poly> rules;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        std::size_t end = literal.find(';', pos);
        std::string_view piece =
            literal.substr(pos, end == std::string_view::npos ? end : end - pos);
        pos = end == std::string_view::npos ? literal.size() + 1 : end + 1;
        std::size_t arrow = piece.find("->");
        if (arrow == std::string_view::npos) {
            // Allow a trailing semicolon: skip a blank piece.
            bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
            if (blank && pos > literal.size()) break;
            throw std::invalid_argument("grammar literal: missing '->' in rule '" +
                                        std::string(piece) + "'");
        }
        Poly lhs = parse_poly(piece.substr(0, arrow));
        auto lhs_vars = lhs.variables();
        if (lhs_vars.size() != 1 || lhs != Poly::variable(*lhs_vars.begin()))
            throw std::invalid_argument("grammar literal: rule left side must be one variable");
        std::string v = *lhs_vars.begin();
        if (rules.count(v))
            throw std::invalid_argument("grammar literal: duplicate rule for '" + v + "'");
        alphabet.push_back(v);
        rules.emplace(v, parse_poly(piece.substr(arrow + 2)));
    }
    if (alphabet.empty()) throw std::invalid_argument("grammar literal: no rules");
    return Grammar(std::move(alphabet), std::move(rules));
}

Poly derive(const Grammar& g, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.exponents()) {
            if (!g.has_rule(v))
                throw std::invalid_argument("derive: variable '" + v + "' not in the alphabet");
            out += Poly::term(m.divided_by(v), c * Rational(static_cast<long long>(e))) *
                   g.rule(v);
        }
    }
    return out;
}

Poly derive_iter(const Grammar& g, const Poly& seed, unsigned n) {
    Poly p = seed;
    for (unsigned i = 0; i < n; ++i) p = derive(g, p);
    return p;
}

std::vector<Rational> extract_row(const Poly& p, const std::string& marker,
                                  std::pair<std::string, std::string> vars, unsigned n) {
    const auto& [u, v] = vars;
    std::vector<Rational> row(n + 1);
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(marker) == 0)
            throw std::invalid_argument("extract_row: term without the marker '" + marker + "'");
        Monomial stripped = m.divided_by(marker);
        unsigned ku = stripped.exponent(u), kv = stripped.exponent(v);
        if (ku + kv != n || stripped.total_degree() != n)
            throw std::invalid_argument("extract_row: term " + to_string(Poly::term(m, c)) +
                                        " is not " + marker + " times degree-" +
                                        std::to_string(n) + " in (" + u + ", " + v + ")");
        row[ku] += c;
    }
    return row;
}

CovCheck change_of_variables_check(unsigned max_n) {
    const Grammar& g2 = builtin_grammar(BuiltinGrammar::g2);
    const Grammar& g3 = builtin_grammar(BuiltinGrammar::g3);
    const std::map<std::string, Poly> cov{
        {"e", Poly::variable("e")},
        {"a", parse_poly("x+y")},
        {"b", parse_poly("x*y")},
    };
    auto fail = [](std::string what) { return CovCheck{false, std::move(what)}; };
    // Single-step images of the two symmetric functions.
    if (derive(g2, parse_poly("x+y")) != substitute(parse_poly("2*a^2-4*b"), cov))
        return fail("D_G2(x+y) != (2a^2-4b) at a=x+y, b=xy");
    if (derive(g2, parse_poly("x*y")) != substitute(parse_poly("a^3-2*a*b"), cov))
        return fail("D_G2(xy) != (a^3-2ab) at a=x+y, b=xy");
    Poly p2 = Poly::variable("e"), p3 = Poly::variable("e");
    for (unsigned n = 1; n <= max_n; ++n) {
        p2 = derive(g2, p2);
        p3 = derive(g3, p3);
        if (substitute(p3, cov) != p2)
            return fail("iterated derivatives of e disagree at n=" + std::to_string(n));
    }
    return {};
}

}  // namespace altgamma
