#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wk {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

/// Canonical "p/q" text form: q > 0, gcd(p, q) = 1, integers as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" and optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

QVec zero_vec(std::size_t n);
QVec unit_vec(std::size_t n, std::size_t i);
QVec from_ints(std::initializer_list<long> values);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& s, const QVec& v);
QVec& operator+=(QVec& a, const QVec& b);

Rational dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

/// Lexicographic total order on exact vectors; shorter vectors first.
std::strong_ordering compare(const QVec& a, const QVec& b);

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return compare(a, b) < 0; }
};

/// Smallest positive rescaling of `v` with coprime integer entries.
/// Throws InvalidInput on the zero vector.
ZVec primitive_integer(const QVec& v);

QVec to_qvec(const ZVec& v);

Integer gcd_of(const ZVec& v);

std::string to_string(const QVec& v);

}  // namespace wk
