#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scd {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

/// Thrown when an operation's stated precondition is violated.
/// `code()` is a stable machine-readable tag (e.g. "not-single-crossing").
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Numeric regime for sign decisions. Exact mode decides signs with no
/// tolerance; approximate mode classifies |x| <= eps as zero.
struct Numeric {
  bool exact = true;
  double eps = 1e-9;

  static Numeric exact_mode() { return Numeric{true, 0.0}; }
  static Numeric float_mode(double eps = 1e-9) { return Numeric{false, eps}; }

  std::string describe() const;
};

/// A scalar value: an exact rational or, in approximate mode, a double.
/// Arithmetic stays exact as long as both operands are exact.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0) {}
  Scalar(int v) : exact_(true), q_(v) {}
  Scalar(long v) : exact_(true), q_(static_cast<long int>(v)) {}
  Scalar(const Rational& q) : exact_(true), q_(q) { q_.canonicalize(); }
  explicit Scalar(double d) : exact_(false), d_(d) {}
  static Scalar ratio(long num, long den);

  bool exact() const { return exact_; }
  const Rational& rat() const;
  double to_double() const { return exact_ ? q_.get_d() : d_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Raw equality (no tolerance); use sign()/cmp() for mode-aware decisions.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double d_ = 0.0;
};

/// sign(x) in {-1, 0, +1}. Approximate values within eps of zero count as 0.
int sign(const Scalar& x, const Numeric& num = Numeric::exact_mode());

/// Three-way comparison through sign(a - b).
int cmp(const Scalar& a, const Scalar& b, const Numeric& num = Numeric::exact_mode());

inline bool is_zero(const Scalar& x, const Numeric& num = Numeric::exact_mode()) {
  return sign(x, num) == 0;
}

}  // namespace scd
