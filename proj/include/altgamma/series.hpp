// Truncated power series in z whose coefficients are exact polynomials in x,
// plus the generating-function checks built on them.
//
// The single most important trick in this module: the generating functions
// being verified contain square roots like sqrt(1+x), but only in pairings
// where they cancel. We never construct a square root. Instead cos_like(u)
// is the series of cos(z*sqrt(u)), whose even z-powers carry whole powers
// of u, and sinq_like(u) is sin(z*sqrt(u))/sqrt(u), whose odd z-powers also
// carry whole powers of u. Every sqrt in the source identities pairs up so
// that these two objects (and their hyperbolic twins) express the exact same
// series with plain polynomial coefficients.
//
// Identities whose denominators are not invertible in the coefficient ring
// (their constant term is a genuine polynomial, e.g. 1-x) are checked by
// cross-multiplication, never division. series_reciprocal refuses anything
// whose leading coefficient is not a nonzero rational constant.

#pragma once

#include "altgamma/poly.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace altgamma::egf {

struct TruncatedSeries {
    unsigned order = 0;        // inclusive max z-power
    std::vector<Poly> coeffs;  // coeffs[n] = [z^n], plain (not n!-scaled)
};

// coeffs[n] = coeff(n) for n = 0..order.
TruncatedSeries series_of(unsigned order, const std::function<Poly(unsigned)>& coeff);
// EGF boundary: coeffs[n] = row(n)/n!.
TruncatedSeries from_rows(unsigned order, const std::function<Poly(unsigned)>& row);

// Arithmetic requires equal orders; mixing truncation depths is an error.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const Poly& c, const TruncatedSeries& a);

// Multiplicative inverse to the truncation order. The constant term must be
// a nonzero rational; a polynomial there means the caller should be
// cross-multiplying instead.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

// cos(z*sqrt(u)):            [z^2k]   = (-1)^k u^k/(2k)!
// sin(z*sqrt(u))/sqrt(u):    [z^2k+1] = (-1)^k u^k/(2k+1)!
// cosh/sinh analogues drop the signs.
TruncatedSeries cos_like(const Poly& u, unsigned order);
TruncatedSeries sinq_like(const Poly& u, unsigned order);
TruncatedSeries cosh_like(const Poly& u, unsigned order);
TruncatedSeries sinhq_like(const Poly& u, unsigned order);

nlohmann::json series_to_json(const TruncatedSeries& s);

struct SeriesCheck {
    bool pass = true;
    int first_fail = -1;  // smallest failing z-order, -1 when pass
    std::string detail;
};

// Each check pits family rows (recurrence or enumeration provenance) against
// the closed generating function, exactly, to order N.
SeriesCheck verify_egf_alt_a(unsigned order);     // type-A alternating Eulerian
SeriesCheck verify_egf_alt_b(unsigned order);     // type-B alternating Eulerian
SeriesCheck verify_egf_m(unsigned order);         // left-peak polynomials
SeriesCheck verify_egf_xi(unsigned order);        // xi family
SeriesCheck verify_egf_springer(unsigned order);  // snake counts
SeriesCheck verify_egf_secant(unsigned order);    // secant numbers

// Differential equation for the type-B alternating series, checked termwise
// on plain coefficients up to order N-1.
SeriesCheck pde_check_alt_b(unsigned order);

// n!-scaled coefficient of the left-peak generating function; one of the
// three routes to the left-peak polynomial.
Poly leftpeak_m_via_egf(unsigned n);

}  // namespace altgamma::egf
