// Formal-derivative engine for context-free grammars: a grammar assigns each
// letter of its alphabet a polynomial, and D_G extends that assignment to the
// whole ring as a derivation (linear, Leibniz). Five grammars are built in.

#pragma once

#include "altgamma/poly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace altgamma {

class Grammar {
  public:
    // Validates that every alphabet letter has a rule and that every rule's
    // right-hand side uses only alphabet letters.
    Grammar(std::vector<std::string> alphabet, std::map<std::string, Poly> rules);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const Poly& rule(const std::string& v) const;
    bool has_rule(const std::string& v) const { return rules_.count(v) != 0; }

  private:
    std::vector<std::string> alphabet_;
    std::map<std::string, Poly> rules_;
};

enum class BuiltinGrammar { dumont, type_b, g1, g2, g3 };

// dumont: x -> xy, y -> xy                    (descents)
// typeB:  x -> xy^2, y -> x^2y                (type-B descents)
// g1:     e -> e(x+y), x,y -> (x^2+y^2)/2     (alternating descents, type A)
// g2:     e -> e(x+y), x,y -> x^2+y^2         (alternating descents, type B)
// g3:     e -> ea, a -> 2a^2-4b, b -> a^3-2ab (g2 after a=x+y, b=xy)
const Grammar& builtin_grammar(BuiltinGrammar which);
// Names: dumont, typeB, g1, g2, g3. Unknown names throw.
const Grammar& builtin_grammar(const std::string& name);

// Rule literal, e.g. "e->e*(x+y); x->x^2+y^2; y->x^2+y^2". Alphabet order is
// the order the left-hand sides appear in.
Grammar parse_grammar(std::string_view literal);

// One derivation step; unknown variables in p are an error.
Poly derive(const Grammar& g, const Poly& p);
// n-fold application by repeated single steps; n = 0 returns the seed.
Poly derive_iter(const Grammar& g, const Poly& seed, unsigned n);

// Reads a coefficient row out of an iterated derivative: p must equal
// marker * (homogeneous polynomial of degree n in u, v); returns the
// coefficients of u^k v^{n-k} for k = 0..n. The marker may coincide with u
// (one factor of it is stripped first). Any term outside that shape throws,
// since it signals a grammar/seed mismatch.
std::vector<Rational> extract_row(const Poly& p, const std::string& marker,
                                  std::pair<std::string, std::string> vars, unsigned n);

struct CovCheck {
    bool pass = true;
    std::string detail;  // counterexample description when pass is false
};

// Checks that g3 is g2 rewritten through a = x+y, b = xy: the two single-step
// images of x+y and xy match, and the iterated derivatives of e agree after
// substitution, for every n <= max_n.
CovCheck change_of_variables_check(unsigned max_n);

}  // namespace altgamma
