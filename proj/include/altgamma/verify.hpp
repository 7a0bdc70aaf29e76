// Identity harness: gamma-basis extraction plus one named check per identity,
// each pitting two independently produced values against each other. Checks
// never compare a value with itself dressed up twice: every comparison pairs
// two distinct provenances, and check_rows_equal enforces that at runtime.

#pragma once

#include "altgamma/families.hpp"
#include "altgamma/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace altgamma {

// f = sum_k coeffs[k] * (c*x)^k * (1+x)^(m-2k), k = 0..floor(m/2).
struct GammaExpansion {
    Rational basis_scale;  // c
    unsigned window = 0;   // m
    std::vector<Rational> coeffs;
};

// Triangular peeling on the lowest degree: basis element k is the unique one
// with x-valuation k, so coeffs[k] is read off the x^k coefficient after
// subtracting the earlier elements. A nonzero residual means f is outside
// the span and is a hard error. Requires c != 0 and deg f <= m.
GammaExpansion gamma_extract(const Poly& f, const Rational& c, unsigned m);
Poly gamma_reassemble(const GammaExpansion& g);

struct VerdictReport {
    std::string id;
    std::string range;  // e.g. "n=0..12"
    bool pass = true;
    std::string counterexample;  // non-empty iff !pass
    std::string note;            // documented deviations, printed verbatim
};

// A family of rows with a declared provenance, for two-sided comparisons.
struct RowSource {
    Provenance prov = Provenance::recurrence;
    std::function<Poly(unsigned)> row;
};

// Compares lhs.row(n) to rhs.row(n) for n = from..to and reports the first
// mismatch (smallest n, then smallest differing coefficient). Comparing two
// sources of the same provenance is vacuous and throws.
VerdictReport check_rows_equal(const std::string& id, unsigned from, unsigned to,
                               const RowSource& lhs, const RowSource& rhs);

// Individual identity checks; the argument is the largest n attempted
// (clamped further by enumeration caps where a side needs enumeration).
VerdictReport verify_thm_leftpeak(unsigned max_n);
VerdictReport verify_petersen_type_b(unsigned max_n);
VerdictReport verify_q_identity(unsigned max_n);
VerdictReport verify_p_identity(unsigned max_n);
VerdictReport verify_convolution(unsigned max_n);
VerdictReport verify_gamma_a(unsigned max_n);
VerdictReport verify_gamma_b(unsigned max_n);
VerdictReport verify_xi_lpk(unsigned max_n);
VerdictReport verify_simsun_gamma_a(unsigned max_n);
VerdictReport verify_boundary(unsigned max_n);

struct SuiteOptions {
    unsigned max_n = 25;      // per-identity ranges are clamped below this
    unsigned egf_order = 16;  // truncation order for generating-function checks
};

// All identity ids in the fixed report order.
const std::vector<std::string>& identity_ids();

// Runs one named identity (unknown id throws) or the whole suite. Reports
// come back in identity_ids() order and depend only on the options and caps,
// never on wall-clock or environment noise.
VerdictReport run_identity(const std::string& id, const SuiteOptions& opts);
std::vector<VerdictReport> run_suite(const SuiteOptions& opts);

// Fixed-layout text rendering; byte-identical for identical reports.
std::string format_report(const std::vector<VerdictReport>& reports);

}  // namespace altgamma
