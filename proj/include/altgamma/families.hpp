// Generators for the polynomial families and scalar sequences, driven by
// recurrences and identities rather than enumeration, so that independent
// routes to the same numbers can be pitted against each other. Families with
// two stated recurrences compute both on every call and refuse to return on
// disagreement.

#pragma once

#include "altgamma/poly.hpp"

#include <string>
#include <vector>

namespace altgamma {

enum class Provenance { recurrence, grammar, enumeration, egf, identity };
std::string provenance_name(Provenance p);

// Type-A alternating Eulerian polynomial, n >= 1, degree n-1. Built from the
// halved triangle recurrence; any cell failing the exact division by 2 is a
// hard error (it would mean a transcription bug, not a math fact).
Poly alt_a(unsigned n);

// Type-B alternating Eulerian polynomial, n >= 0, degree n. The triangle
// recurrence and the differential recurrence are both evaluated and must
// agree.
Poly alt_b(unsigned n);

// Classical Eulerian polynomials by descent count, n >= 1, enumeration
// within cap, cross-checked against the corresponding grammar row.
Poly euler_a(unsigned n);
Poly euler_b(unsigned n);

// Derivative polynomials: P_0 = x, P_{n+1} = (1+x^2)P_n';
// Q_0 = 1, Q_{n+1} = xQ_n + (1+x^2)Q_n'.
Poly deriv_p(unsigned n);
Poly deriv_q(unsigned n);

// True iff the binomial convolution of P and Q rows reproduces deriv_q(n+1).
bool q_convolution_check(unsigned n);

// Simsun-permutation polynomials: S_0 = S_1 = 1,
// S_{n+1} = (1+nx)S_n + x(1-2x)S_n' for n >= 1.
Poly simsun_s(unsigned n);

// eta_n(x) = S_{n-1}(x+1), n >= 1: the gamma-coefficient polynomial for the
// type-A family.
Poly eta(unsigned n);

// xi_n, n >= 0, degree floor(n/2): the gamma-coefficient polynomial for the
// type-B family. Triangle and polynomial recurrences must agree.
Poly xi(unsigned n);

// Left-peak polynomial M_n, n >= 1, by the requested route. The three routes
// must agree wherever available; that comparison lives in the verify module.
enum class MSource { enumeration, egf, xi_shift };
Poly leftpeak_m(unsigned n, MSource source);

// Springer number s_n: constant coefficient of alt_b(n), cross-checked
// against the xi constant term always and against the snake count when n is
// within the enumeration cap.
Int springer(unsigned n);

// Secant number E_n for even n: from the xi central coefficients (two
// positions that must agree), cross-checked against the alternating count
// when within cap.
Int secant(unsigned n);

struct FamilyRow {
    unsigned n = 0;
    Poly value;
    Provenance prov = Provenance::recurrence;
};

struct FamilyTable {
    std::string id;
    std::vector<FamilyRow> rows;
};

// ids: altA, altB, eulerA, eulerB, P, Q, S, eta, xi, M, springer, secant.
// Rows n = from..to; families with a later first index (altA, eulerA, eulerB,
// eta, M at n >= 1; secant even only) reject out-of-domain from/to.
FamilyTable family_table(const std::string& id, unsigned from, unsigned to);
const std::vector<std::string>& family_ids();

}  // namespace altgamma
