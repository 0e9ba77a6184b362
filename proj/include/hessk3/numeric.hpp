#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals on top of GMP.
// Everything in this library is exact; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessk3 {

using Int = mpz_class;
using Rat = mpq_class;

// Parse an integer from a decimal string. Throws on malformed input.
Int parse_int(const std::string& s);

// Parse a rational from "p" or "p/q" (decimal, q > 0 after canonicalization).
// Throws on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& a);
// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rat& q);

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

// Compare |a| with |b|; <0, 0, >0 like strcmp.
inline int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

// Floor/round division helpers used by the normal-form algorithms.
Int floor_div(const Int& a, const Int& b);
// Nearest integer to a/b, ties toward -inf (any fixed tie rule works for
// Gauss reduction; this one keeps reduction deterministic).
Int round_div(const Int& a, const Int& b);

// True iff q is the square of a rational; if so *root = the nonnegative root.
bool rat_is_square(const Rat& q, Rat* root);

// lcm of denominators of a list of rationals (1 for an empty list).
Int common_denominator(const std::vector<Rat>& qs);

// Reduce q modulo m (m > 0) into [0, m). Used for discriminant forms with
// m = 1 (bilinear values in Q/Z) and m = 2 (quadratic values in Q/2Z).
Rat mod_reduce(const Rat& q, const Int& m);

}  // namespace hessk3
