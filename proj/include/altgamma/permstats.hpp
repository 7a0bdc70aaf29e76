// Exhaustive enumeration of permutations and signed permutations with the
// descent-type statistics, used as the ground-truth oracle by every other
// module. Words are stored 0-indexed; the virtual leading 0 of a signed
// permutation (and of lpk's unsigned convention) is never stored.

#pragma once

#include "altgamma/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace altgamma {

// A permutation word. Unsigned: the values 1..n in some order. Signed: n
// values whose absolute values are 1..n in some order.
using Word = std::vector<int>;

// Enumeration is exhaustive, so sizes are capped. Exceeding a cap is an
// error, never a truncation. ALTGAMMA_ENUM_CAP=<k> in the environment sets
// both caps to k; override_enum_caps (used by the CLI flag) beats both.
struct EnumCaps {
    unsigned max_unsigned = 10;
    unsigned max_signed = 8;
};
EnumCaps enum_caps();
void override_enum_caps(std::optional<EnumCaps> caps);

// Visit every element exactly once, in lexicographic order on the sign
// pattern ('+' before '-', leftmost position most significant) and, within a
// pattern, on the underlying unsigned word. Aggregation across visits must
// be commutative, which also keeps the streams partitionable by prefix.
void for_each_perm(unsigned n, const std::function<void(const Word&)>& visit);
void for_each_signed_perm(unsigned n, const std::function<void(const Word&)>& visit);

std::vector<Word> perms(unsigned n);
std::vector<Word> signed_perms(unsigned n);

// des(pi) = #{i in [n-1] : pi(i) > pi(i+1)}.
unsigned des(const Word& w);
// des_B adds the virtual pair (0, sigma(1)), so position 0 contributes when
// sigma(1) < 0.
unsigned des_b(const Word& w);
// Alternating descents, type A: descent at odd i, ascent at even i (1-indexed).
unsigned altdes_a(const Word& w);
// Alternating descents, type B: with sigma(0)=0, position j in {0..n-1}
// counts when j is even and sigma(j) < sigma(j+1), or j is odd and
// sigma(j) > sigma(j+1). altasc_b reverses both inequalities, so the two
// always sum to n.
unsigned altdes_b(const Word& w);
unsigned altasc_b(const Word& w);
// Remmel's variant, computed via altdes_b: subtract one when sigma(1) > 0.
unsigned altdesb_remmel(const Word& w);
// Left peaks: i in [n-1] with pi(i-1) < pi(i) > pi(i+1), pi(0) = 0.
unsigned lpk(const Word& w);
// Snake: 0 < sigma(1) > sigma(2) < sigma(3) > ... through the whole word.
bool is_snake(const Word& w);
// Alternating (down-up): pi(1) > pi(2) < pi(3) > ...
bool is_alternating(const Word& w);

// The complement involution: i-th largest letter <-> i-th smallest, positions
// fixed. Throws on duplicate letters.
Word complement(const Word& w);

// Insert `letter` (one of +n, -n, where n = prev.size()+1) after the first j
// letters of prev and complement the rest: prev[0..j) + letter + C(prev[j..)).
// j = prev.size() appends.
Word insert_complemented(const Word& prev, unsigned j, int letter);

// True iff the 2n * |S^B_{n-1}| insertions cover S^B_n exactly once each.
bool insertion_bijection_check(unsigned n);

enum class Stat {
    des,
    des_b,
    altdes,
    altdes_b,
    altasc_b,
    altdesb_remmel,
    lpk,
    snake,
    alternating,
};

// CLI-facing names: des, desB, altdes, altdesB, altascB, altdesbRemmel, lpk,
// snake, alternating. Unknown names throw.
Stat stat_from_name(const std::string& name);
const std::vector<std::string>& stat_names();
// Signed statistics enumerate S^B_n, unsigned ones S_n.
bool stat_is_signed(Stat s);

// Exact distribution polynomial in x: coefficient of x^k counts words with
// statistic value k. Predicates yield indicator distributions c0 + c1*x.
Poly distribution(Stat s, unsigned n);

}  // namespace altgamma
