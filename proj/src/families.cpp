#include "altgamma/families.hpp"

#include <stdexcept>

#include "altgamma/expr.hpp"
#include "altgamma/grammar.hpp"
#include "altgamma/permstats.hpp"
#include "altgamma/series.hpp"

namespace altgamma {

namespace {

Poly row_poly(const std::vector<Rational>& row) {
    Poly p;
    for (unsigned k = 0; k < row.size(); ++k) p += row[k] * pow(Poly::variable("x"), k);
    return p;
}

std::vector<Rational> coeff_row(const Poly& p, unsigned window) { return coeff_list(p, window); }

// Triangle for the type-A family: row n holds coefficients k = 0..n-1.
std::vector<Int> alt_a_row(unsigned n) {
    std::vector<Int> row{1};  // n = 1
    for (unsigned m = 1; m + 1 <= n; ++m) {
        auto at = [&](long long k) -> Int {
            return k < 0 || k >= static_cast<long long>(row.size()) ? Int(0)
                                                                    : row[static_cast<std::size_t>(k)];
        };
        std::vector<Int> next(m + 1);
        for (long long k = 0; k <= static_cast<long long>(m); ++k) {
            Int twice = (k + 1) * (at(k + 1) + at(k - 1)) + (m - k + 1) * (at(k) + at(k - 2));
            if (twice % 2 != 0)
                throw std::logic_error("alt_a: recurrence cell not divisible by 2 at n=" +
                                       std::to_string(m + 1) + ", k=" + std::to_string(k));
            next[static_cast<std::size_t>(k)] = twice / 2;
        }
        row = std::move(next);
    }
    return row;
}

// Triangle for the type-B family: row n holds coefficients k = 0..n.
std::vector<Int> alt_b_row(unsigned n) {
    std::vector<Int> row{1};  // n = 0
    for (unsigned m = 0; m + 1 <= n; ++m) {
        auto at = [&](long long k) -> Int {
            return k < 0 || k > static_cast<long long>(m) ? Int(0)
                                                          : row[static_cast<std::size_t>(k)];
        };
        std::vector<Int> next(m + 2);
        for (long long k = 0; k <= static_cast<long long>(m) + 1; ++k)
            next[static_cast<std::size_t>(k)] = (k + 1) * at(k + 1) + k * at(k - 1) +
                                                (m - k + 1) * at(k) + (m - k + 2) * at(k - 2);
        row = std::move(next);
    }
    return row;
}

Poly int_row_poly(const std::vector<Int>& row) {
    Poly p;
    for (unsigned k = 0; k < row.size(); ++k)
        p += Rational(row[k]) * pow(Poly::variable("x"), k);
    return p;
}

// Triangle for xi: row n holds coefficients i = 0..floor(n/2).
std::vector<Int> xi_row(unsigned n) {
    std::vector<Int> row{1};  // n = 0
    for (unsigned m = 0; m + 1 <= n; ++m) {
        auto at = [&](long long i) -> Int {
            return i < 0 || i >= static_cast<long long>(row.size()) ? Int(0)
                                                                    : row[static_cast<std::size_t>(i)];
        };
        std::vector<Int> next((m + 1) / 2 + 1);
        for (long long i = 0; i < static_cast<long long>(next.size()); ++i)
            next[static_cast<std::size_t>(i)] = (1 + 2 * static_cast<long long>(m) - 6 * i) * at(i) +
                                                (static_cast<long long>(m) - 2 * i + 2) * at(i - 1) -
                                                4 * (i + 1) * at(i + 1);
        row = std::move(next);
    }
    return row;
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::recurrence: return "recurrence";
        case Provenance::grammar: return "grammar";
        case Provenance::enumeration: return "enumeration";
        case Provenance::egf: return "egf";
        case Provenance::identity: return "identity";
    }
    throw std::logic_error("provenance_name: unhandled enumerator");
}

Poly alt_a(unsigned n) {
    if (n < 1) throw std::invalid_argument("alt_a: need n >= 1");
    return int_row_poly(alt_a_row(n));
}

Poly alt_b(unsigned n) {
    Poly triangle = int_row_poly(alt_b_row(n));
    // Differential recurrence, independently.
    Poly diff = Poly(1);
    for (unsigned m = 0; m + 1 <= n; ++m) {
        Poly factor = Poly(1 + static_cast<long long>(m)) + Poly::variable("x") +
                      Rational(static_cast<long long>(m)) * parse_poly("x^2");
        diff = factor * diff + parse_poly("(1-x)*(1+x^2)") * partial(diff, "x");
    }
    if (triangle != diff)
        throw std::logic_error("alt_b: triangle and differential recurrences disagree at n=" +
                               std::to_string(n));
    return triangle;
}

Poly euler_a(unsigned n) {
    if (n < 1) throw std::invalid_argument("euler_a: need n >= 1");
    Poly brute = distribution(Stat::des, n);
    // Grammar route: strip one marker factor off the n-th dumont derivative.
    auto row = extract_row(derive_iter(builtin_grammar(BuiltinGrammar::dumont),
                                       Poly::variable("x"), n),
                           "x", {"x", "y"}, n);
    row.pop_back();  // structural zero at k = n
    if (row_poly(row) != brute)
        throw std::logic_error("euler_a: enumeration and grammar disagree at n=" +
                               std::to_string(n));
    return brute;
}

Poly euler_b(unsigned n) {
    if (n < 1) throw std::invalid_argument("euler_b: need n >= 1");
    Poly brute = distribution(Stat::des_b, n);
    Poly expected;
    auto coeffs = coeff_row(brute, n);
    for (unsigned k = 0; k <= n; ++k)
        expected += coeffs[k] * pow(Poly::variable("x"), 2 * n - 2 * k + 1) *
                    pow(Poly::variable("y"), 2 * k + 1);
    Poly dn = derive_iter(builtin_grammar(BuiltinGrammar::type_b), parse_poly("x*y"), n);
    if (dn != expected)
        throw std::logic_error("euler_b: enumeration and grammar disagree at n=" +
                               std::to_string(n));
    return brute;
}

Poly deriv_p(unsigned n) {
    Poly p = Poly::variable("x");
    for (unsigned m = 0; m < n; ++m) p = parse_poly("1+x^2") * partial(p, "x");
    return p;
}

Poly deriv_q(unsigned n) {
    Poly q(1);
    for (unsigned m = 0; m < n; ++m)
        q = Poly::variable("x") * q + parse_poly("1+x^2") * partial(q, "x");
    return q;
}

bool q_convolution_check(unsigned n) {
    Poly sum;
    for (unsigned k = 0; k <= n; ++k)
        sum += Rational(binomial(n, k)) * deriv_p(k) * deriv_q(n - k);
    return sum == deriv_q(n + 1);
}

Poly simsun_s(unsigned n) {
    if (n == 0 || n == 1) return Poly(1);
    Poly s(1);  // S_1
    for (unsigned m = 1; m + 1 <= n; ++m)
        s = (Poly(1) + Rational(static_cast<long long>(m)) * Poly::variable("x")) * s +
            parse_poly("x*(1-2x)") * partial(s, "x");
    return s;
}

Poly eta(unsigned n) {
    if (n < 1) throw std::invalid_argument("eta: need n >= 1");
    return substitute(simsun_s(n - 1), {{"x", parse_poly("x+1")}});
}

Poly xi(unsigned n) {
    Poly triangle = int_row_poly(xi_row(n));
    Poly poly_rec(1);
    for (unsigned m = 0; m + 1 <= n; ++m) {
        Poly factor = Poly(1 + 2 * static_cast<long long>(m)) +
                      Rational(static_cast<long long>(m)) * Poly::variable("x");
        poly_rec = factor * poly_rec - parse_poly("(1+x)*(4+2x)") * partial(poly_rec, "x");
    }
    if (triangle != poly_rec)
        throw std::logic_error("xi: triangle and polynomial recurrences disagree at n=" +
                               std::to_string(n));
    return triangle;
}

Poly leftpeak_m(unsigned n, MSource source) {
    if (n < 1) throw std::invalid_argument("leftpeak_m: need n >= 1");
    switch (source) {
        case MSource::enumeration: return distribution(Stat::lpk, n);
        case MSource::egf: return egf::leftpeak_m_via_egf(n);
        case MSource::xi_shift: return substitute(xi(n), {{"x", parse_poly("x-2")}});
    }
    throw std::logic_error("leftpeak_m: unhandled source");
}

Int springer(unsigned n) {
    Rational from_alt_b = coeff_row(alt_b(n), n)[0];
    Int from_xi = xi_row(n)[0];
    if (from_alt_b != Rational(from_xi))
        throw std::logic_error("springer: constant terms of the two families disagree at n=" +
                               std::to_string(n));
    if (n <= enum_caps().max_signed) {
        Int snakes = 0;
        for_each_signed_perm(n, [&](const Word& w) { snakes += is_snake(w) ? 1 : 0; });
        if (snakes != from_xi)
            throw std::logic_error("springer: snake count disagrees at n=" + std::to_string(n));
    }
    return from_xi;
}

Int secant(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("secant: index must be even");
    auto row = xi_row(n);
    Int central = row[n / 2];
    if (n >= 1) {
        auto prev = xi_row(n - 1);
        Int prev_central = n / 2 - 1 < prev.size() ? prev[n / 2 - 1] : Int(0);
        if (prev_central != central)
            throw std::logic_error("secant: the two central xi coefficients disagree at n=" +
                                   std::to_string(n));
    }
    if (n <= enum_caps().max_unsigned) {
        Int alternating = 0;
        for_each_perm(n, [&](const Word& w) { alternating += is_alternating(w) ? 1 : 0; });
        if (alternating != central)
            throw std::logic_error("secant: alternating count disagrees at n=" +
                                   std::to_string(n));
    }
    return central;
}

FamilyTable family_table(const std::string& id, unsigned from, unsigned to) {
    if (from > to) throw std::invalid_argument("family_table: from > to");
    auto reject_below = [&](unsigned first) {
        if (from < first)
            throw std::invalid_argument("family '" + id + "' starts at n=" +
                                        std::to_string(first));
    };
    FamilyTable table{id, {}};
    auto fill = [&](Provenance prov, const std::function<Poly(unsigned)>& gen) {
        for (unsigned n = from; n <= to; ++n) table.rows.push_back({n, gen(n), prov});
    };
    if (id == "altA") {
        reject_below(1);
        fill(Provenance::recurrence, [](unsigned n) { return alt_a(n); });
    } else if (id == "altB") {
        fill(Provenance::recurrence, [](unsigned n) { return alt_b(n); });
    } else if (id == "eulerA") {
        reject_below(1);
        fill(Provenance::enumeration, [](unsigned n) { return euler_a(n); });
    } else if (id == "eulerB") {
        reject_below(1);
        fill(Provenance::enumeration, [](unsigned n) { return euler_b(n); });
    } else if (id == "P") {
        fill(Provenance::recurrence, [](unsigned n) { return deriv_p(n); });
    } else if (id == "Q") {
        fill(Provenance::recurrence, [](unsigned n) { return deriv_q(n); });
    } else if (id == "S") {
        fill(Provenance::recurrence, [](unsigned n) { return simsun_s(n); });
    } else if (id == "eta") {
        reject_below(1);
        fill(Provenance::recurrence, [](unsigned n) { return eta(n); });
    } else if (id == "xi") {
        fill(Provenance::recurrence, [](unsigned n) { return xi(n); });
    } else if (id == "M") {
        reject_below(1);
        // The xi-shift is the cap-free route; agreement with enumeration is
        // the verify module's business.
        fill(Provenance::identity,
             [](unsigned n) { return leftpeak_m(n, MSource::xi_shift); });
    } else if (id == "springer") {
        fill(Provenance::recurrence, [](unsigned n) { return Poly(Rational(springer(n))); });
    } else if (id == "secant") {
        for (unsigned n = from; n <= to; ++n) {
            if (n % 2 != 0) continue;
            table.rows.push_back({n, Poly(Rational(secant(n))), Provenance::recurrence});
        }
        if (table.rows.empty())
            throw std::invalid_argument("family 'secant' has no even index in [from, to]");
    } else {
        throw std::invalid_argument("unknown family '" + id + "'");
    }
    return table;
}

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids = {"altA", "altB", "eulerA", "eulerB",
                                                 "P",    "Q",    "S",      "eta",
                                                 "xi",   "M",    "springer", "secant"};
    return ids;
}

}  // namespace altgamma
