#include "scd/scalar.hpp"

#include <cmath>
#include <sstream>

namespace scd {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw PreconditionError("bad-rational", "cannot parse rational '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw PreconditionError("bad-rational", "zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Numeric::describe() const {
  if (exact) return "exact";
  std::ostringstream os;
  os << "float(eps=" << eps << ")";
  return os.str();
}

Scalar Scalar::ratio(long num, long den) {
  Rational q(static_cast<long int>(num), static_cast<long int>(den));
  q.canonicalize();
  return Scalar(q);
}

const Rational& Scalar::rat() const {
  if (!exact_) throw PreconditionError("not-exact", "approximate scalar has no rational value");
  return q_;
}

Scalar Scalar::operator-() const {
  if (exact_) {
    Scalar r;
    r.q_ = -q_;
    return r;
  }
  return Scalar(-d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (exact_ && o.exact_) {
    q_ += o.q_;
  } else {
    d_ = to_double() + o.to_double();
    exact_ = false;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (exact_ && o.exact_) {
    q_ -= o.q_;
  } else {
    d_ = to_double() - o.to_double();
    exact_ = false;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (exact_ && o.exact_) {
    q_ *= o.q_;
  } else {
    d_ = to_double() * o.to_double();
    exact_ = false;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (exact_ && o.exact_) {
    if (o.q_ == 0) throw PreconditionError("division-by-zero", "exact division by zero");
    q_ /= o.q_;
  } else {
    d_ = to_double() / o.to_double();
    exact_ = false;
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact_ && o.exact_) return q_ == o.q_;
  return to_double() == o.to_double();
}

std::string Scalar::str() const {
  if (exact_) return q_.get_str();
  std::ostringstream os;
  os.precision(17);
  os << d_;
  return os.str();
}

int sign(const Scalar& x, const Numeric& num) {
  if (x.exact()) {
    int s = sgn(x.rat());
    // An exact value inside an approximate table still obeys the tolerance.
    if (!num.exact && s != 0 && std::abs(x.to_double()) <= num.eps) return 0;
    return s;
  }
  double d = x.to_double();
  if (std::abs(d) <= num.eps) return 0;
  return d > 0 ? 1 : -1;
}

int cmp(const Scalar& a, const Scalar& b, const Numeric& num) { return sign(a - b, num); }

}  // namespace scd
