#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ngpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer linear form or integer vector of arbitrary precision.
using IntVector = std::vector<Integer>;
/// A point of Q^d.
using PointQ = std::vector<Rational>;
/// A point of Z^d. Lattice-point sets stay inside enumeration boxes, so
/// 64-bit coordinates are enough; conversions from Integer are checked.
using LatticePoint = std::vector<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& q);  // throws unless q is integral

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integral(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const PointQ& x);
Rational dot(const PointQ& a, const PointQ& x);

/// Content (gcd of absolute entries); zero for the zero vector.
Integer content(const IntVector& v);

/// Lcm of all denominators of v.
Integer common_denominator(const PointQ& v);

PointQ to_rational(const LatticePoint& p);
PointQ to_rational(const IntVector& p);
/// Throws if some coordinate is not integral or does not fit in 64 bits.
LatticePoint to_lattice(const PointQ& p);
bool is_integral(const PointQ& p);

std::string to_string(const PointQ& p);
std::string to_string(const LatticePoint& p);

}  // namespace ngpoly
