#include "wonderkit/rational.hpp"

#include <cctype>

#include "wonderkit/errors.hpp"

namespace wk {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QVec zero_vec(std::size_t n) { return QVec(n, Rational(0)); }

QVec unit_vec(std::size_t n, std::size_t i) {
  QVec v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

QVec from_ints(std::initializer_list<long> values) {
  QVec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a);
  r += b;
  return r;
}

QVec& operator+=(QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator-(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec operator*(const Rational& s, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::strong_ordering compare(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer gcd_of(const ZVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

ZVec primitive_integer(const QVec& v) {
  if (is_zero(v)) throw InvalidInput("zero vector has no primitive form");
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  ZVec z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num() * (den / v[i].get_den());
  const Integer g = gcd_of(z);
  for (auto& x : z) x /= g;
  return z;
}

QVec to_qvec(const ZVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += is_integer(v[i]) ? v[i].get_num().get_str() : v[i].get_str();
  }
  return s + ")";
}

}  // namespace wk
