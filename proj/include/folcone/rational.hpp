#pragma once

// Exact integer and rational vectors on top of GMP. All geometric decisions
// in this library are made with these types; no floating point is involved.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "folcone/errors.hpp"

namespace folcone {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// ---- scalar helpers -------------------------------------------------------

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

std::string format_int(const Int& x);
std::string format_rat(const Rat& x); // "p/q", bare "p" when q = 1
Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text); // accepts "p" and "p/q"
Rat make_rat(const Int& num, const Int& den); // reduced to lowest terms

// ---- vector construction and formatting -----------------------------------

ZVec zvec_of(std::initializer_list<long> entries);
QVec qvec_of_zvec(const ZVec& v);
std::string format_zvec(const ZVec& v); // "(a, b, c)"
std::string format_qvec(const QVec& v);

// ---- vector arithmetic -----------------------------------------------------

bool is_zero_vec(const ZVec& v);
bool is_zero_vec(const QVec& v);

void add_into(ZVec& acc, const ZVec& v);
ZVec add(const ZVec& a, const ZVec& b);
ZVec sub(const ZVec& a, const ZVec& b);
ZVec scale(const Int& c, const ZVec& v);

Int dot(const ZVec& a, const ZVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const ZVec& a, const QVec& b);

// a*x + b*y componentwise.
ZVec combine(const Int& a, const ZVec& x, const Int& b, const ZVec& y);

// Divide by the gcd of the entries. Zero vectors pass through unchanged.
// The sign is preserved: the result spans the same ray.
ZVec primitive(const ZVec& v);

// Clear denominators and reduce; spans the same ray as the input.
ZVec primitive(const QVec& v);

// Strict total order used everywhere a deterministic list is needed.
bool lex_less(const ZVec& a, const ZVec& b);

void sort_unique(std::vector<ZVec>& vecs);

// Max-norm of a rational vector, as a rational.
Rat max_norm(const QVec& v);

} // namespace folcone
