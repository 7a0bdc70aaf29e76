#include "altgamma/poly.hpp"

#include <sstream>

namespace altgamma {

Poly pow(const Poly& p, unsigned k) {
    Poly r(1);
    Poly base = p;
    for (; k; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

Poly partial(const Poly& p, const std::string& v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        r += Poly::term(m.divided_by(v), c * Rational(static_cast<long long>(e)));
    }
    return r;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment) {
    Poly result;
    for (const auto& [m, c] : p.terms()) {
        Poly t(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("substitute: no assignment for variable '" + v + "'");
            t *= pow(it->second, e);
        }
        result += t;
    }
    return result;
}

Rational eval_rational(const Poly& p, const std::map<std::string, Rational>& point) {
    Rational result;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("eval_rational: no value for variable '" + v + "'");
            t *= it->second.pow(e);
        }
        result += t;
    }
    return result;
}

std::string univariate_var(const Poly& p, const std::string& fallback) {
    auto vars = p.variables();
    if (vars.empty()) return fallback;
    if (vars.size() > 1) {
        std::string names;
        for (const auto& v : vars) names += names.empty() ? v : "," + v;
        throw std::invalid_argument("expected a univariate polynomial, got variables {" + names + "}");
    }
    return *vars.begin();
}

std::vector<Rational> coeff_list(const Poly& p, unsigned m, const std::string& var) {
    std::vector<Rational> coeffs(m + 1);
    for (const auto& [mono, c] : p.terms()) {
        unsigned e = mono.exponent(var);
        if (mono.total_degree() != e)
            throw std::invalid_argument("coeff_list: polynomial is not univariate in " + var);
        if (e > m)
            throw std::invalid_argument("coeff_list: degree " + std::to_string(e) +
                                        " exceeds window " + std::to_string(m));
        coeffs[e] = c;
    }
    return coeffs;
}

std::vector<Rational> coeff_list(const Poly& p, unsigned m) {
    return coeff_list(p, m, univariate_var(p));
}

Poly from_coeff_list(const std::vector<Rational>& coeffs, const std::string& var) {
    Poly p;
    for (unsigned k = 0; k < coeffs.size(); ++k)
        p += Poly::term(Monomial::var(var, k), coeffs[k]);
    return p;
}

Poly binomial_substitute(const Poly& g, unsigned m, const Poly& plus, const Poly& minus) {
    auto coeffs = coeff_list(g, m);
    // plus^k * minus^(m-k) built incrementally from minus^m.
    Poly r;
    Poly minus_pow(1);
    std::vector<Poly> minus_powers(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        minus_powers[k] = minus_pow;
        if (k < m) minus_pow *= minus;
    }
    Poly plus_pow(1);
    for (unsigned k = 0; k <= m; ++k) {
        if (!coeffs[k].is_zero()) r += coeffs[k] * (plus_pow * minus_powers[m - k]);
        if (k < m) plus_pow *= plus;
    }
    return r;
}

Poly reversal(const Poly& g, unsigned m) {
    std::string v = univariate_var(g);
    auto coeffs = coeff_list(g, m, v);
    std::vector<Rational> rev(coeffs.rbegin(), coeffs.rend());
    return from_coeff_list(rev, v);
}

bool palindromic(const Poly& g, unsigned m) { return g == reversal(g, m); }

bool unimodal(const Poly& g) {
    if (g.is_zero()) return true;
    unsigned deg = *g.total_degree();
    auto coeffs = coeff_list(g, deg);
    for (const auto& c : coeffs) {
        if (c.is_negative() || !c.is_integer())
            throw std::domain_error("unimodal: requires nonnegative integer coefficients, got " +
                                    c.str());
    }
    std::size_t i = 0;
    while (i + 1 < coeffs.size() && coeffs[i] <= coeffs[i + 1]) ++i;
    while (i + 1 < coeffs.size() && coeffs[i] >= coeffs[i + 1]) ++i;
    return i + 1 == coeffs.size();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.is_negative()) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a.is_negative() ? '-' : '+');
            if (a.is_negative()) a = -a;
        }
        first = false;
        bool unit_coef = a.is_one() && !m.is_unit();
        if (!unit_coef) os << a.str();
        bool need_star = !unit_coef;
        for (const auto& [v, e] : m.exponents()) {
            if (need_star) os << '*';
            os << v;
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace altgamma
