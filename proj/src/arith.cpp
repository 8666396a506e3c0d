#include "ngpoly/arith.hpp"

#include <numeric>
#include <sstream>

namespace ngpoly {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty rational");
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw Error("malformed rational '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error("malformed rational '" + std::string(text) + "'");
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t to_int64(const Integer& z) {
  static_assert(sizeof(long) == 8, "64-bit long required");
  if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw Error("non-integral value " + q.get_str());
  return to_int64(q.get_num());
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const PointQ& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

Rational dot(const PointQ& a, const PointQ& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer common_denominator(const PointQ& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

PointQ to_rational(const LatticePoint& p) {
  PointQ q;
  q.reserve(p.size());
  for (auto x : p) q.emplace_back(static_cast<long>(x));
  return q;
}

PointQ to_rational(const IntVector& p) {
  PointQ q;
  q.reserve(p.size());
  for (const auto& x : p) q.emplace_back(x);
  return q;
}

LatticePoint to_lattice(const PointQ& p) {
  LatticePoint z;
  z.reserve(p.size());
  for (const auto& x : p) z.push_back(to_int64(x));
  return z;
}

bool is_integral(const PointQ& p) {
  for (const auto& x : p)
    if (!is_integral(x)) return false;
  return true;
}

std::string to_string(const PointQ& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace ngpoly
