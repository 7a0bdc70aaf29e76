// Sparse multivariate polynomials with exact rational coefficients.
//
// A Poly is a map from monomials to nonzero Rational coefficients; the zero
// polynomial is the empty map, so equality of values is equality of term maps.
// Monomials store no zero exponents and compare by walking the merged variable
// set in name order with smaller exponents first, which makes term order (and
// therefore printing and serialization) deterministic: univariate polynomials
// come out in ascending degree, and homogeneous rows in x,y come out in
// ascending x-power.

#pragma once

#include "altgamma/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace altgamma {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<std::string, unsigned> exps) : exps_(std::move(exps)) {
        for (auto it = exps_.begin(); it != exps_.end();) {
            it = it->second == 0 ? exps_.erase(it) : std::next(it);
        }
    }

    static Monomial var(const std::string& name, unsigned k = 1) {
        Monomial m;
        if (k > 0) m.exps_[name] = k;
        return m;
    }

    const std::map<std::string, unsigned>& exponents() const { return exps_; }
    unsigned exponent(const std::string& v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }
    bool is_unit() const { return exps_.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) r.exps_[v] += e;
        return r;
    }

    // Lowers the exponent of v by one; exponent must be positive.
    Monomial divided_by(const std::string& v) const {
        Monomial r = *this;
        auto it = r.exps_.find(v);
        if (it == r.exps_.end()) throw std::invalid_argument("Monomial: cannot divide by " + v);
        if (--it->second == 0) r.exps_.erase(it);
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const {
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() || b != o.exps_.end()) {
            // Next variable in merged name order; a missing entry is exponent 0.
            if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
                return false;  // o lacks this variable, so o is smaller here
            }
            if (a == exps_.end() || b->first < a->first) {
                return true;
            }
            if (a->second != b->second) return a->second < b->second;
            ++a;
            ++b;
        }
        return false;
    }

private:
    std::map<std::string, unsigned> exps_;
};

class Poly {
public:
    Poly() = default;
    Poly(long long c) { insert(Monomial{}, Rational(c)); }
    Poly(const Rational& c) { insert(Monomial{}, c); }

    static Poly variable(const std::string& name) { return term(Monomial::var(name), 1); }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        p.insert(m, c);
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational() : it->second;
    }

    // True when every term is a pure rational constant (possibly none).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.empty() ? Rational() : terms_.begin()->second;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exponents()) vs.insert(v);
        return vs;
    }

    // Total degree; empty for the zero polynomial (degree minus infinity).
    std::optional<unsigned> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    std::optional<unsigned> degree_in(const std::string& v) const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) insert(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) insert(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.insert(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& scale(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coef] : terms_) coef *= c;
        return *this;
    }
    friend Poly operator*(const Rational& c, Poly p) { return p.scale(c); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void insert(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

Poly pow(const Poly& p, unsigned k);

// Formal partial derivative with respect to v.
Poly partial(const Poly& p, const std::string& v);

// Image of p under the ring homomorphism sending each variable to its assigned
// polynomial. Every variable occurring in p must be assigned.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment);

// Exact evaluation at a rational point; every variable of p must be assigned.
Rational eval_rational(const Poly& p, const std::map<std::string, Rational>& point);

// ---- univariate helpers ----------------------------------------------------
//
// These treat p as a polynomial in a single variable inside a degree window
// 0..m. The window is explicit because symmetry of a family row is relative to
// the family degree, not to the incidental degree of one polynomial.

// The single variable of p, or `fallback` if p is constant. Throws when p has
// two or more variables.
std::string univariate_var(const Poly& p, const std::string& fallback = "x");

// Coefficients c_0..c_m; throws if deg(p) > m or p is not univariate.
std::vector<Rational> coeff_list(const Poly& p, unsigned m);
std::vector<Rational> coeff_list(const Poly& p, unsigned m, const std::string& var);

Poly from_coeff_list(const std::vector<Rational>& coeffs, const std::string& var = "x");

// Sum_k g_k * plus^k * minus^(m-k): the cleared-denominator form of
// minus^m * g(plus/minus). Requires deg(g) <= m.
Poly binomial_substitute(const Poly& g, unsigned m, const Poly& plus, const Poly& minus);

// Coefficient list reversed within the window: x^m * g(1/x).
Poly reversal(const Poly& g, unsigned m);

bool palindromic(const Poly& g, unsigned m);

// True when the coefficient sequence rises weakly then falls weakly. Requires
// nonnegative integer coefficients.
bool unimodal(const Poly& g);

// Deterministic compact rendering, terms in canonical order, e.g.
// "11+13*x+13*x^2+11*x^3" or "11*a^3-20*a*b".
std::string to_string(const Poly& p);

}  // namespace altgamma
