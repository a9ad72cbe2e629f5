#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace qps {

using Rational = mpq_class;

/// Exact element of Q(q) with q a primitive cube root of unity, stored as
/// r0 + r1*q on the basis {1, q}. Products are reduced via q^2 = -1 - q,
/// so q^3 = 1 and 1 + q + q^2 = 0 hold identically.
class Scalar {
 public:
  Scalar() : r0_(0), r1_(0) {}
  Scalar(long n) : r0_(n), r1_(0) {}  // NOLINT: implicit by design
  Scalar(Rational r) : r0_(std::move(r)), r1_(0) {}
  Scalar(Rational r0, Rational r1) : r0_(std::move(r0)), r1_(std::move(r1)) {}

  /// q^n for any integer n (negative allowed; period 3).
  static Scalar q(long n = 1) {
    long m = ((n % 3) + 3) % 3;
    if (m == 0) return Scalar(1);
    if (m == 1) return Scalar(Rational(0), Rational(1));
    return Scalar(Rational(-1), Rational(-1));  // q^2 = -1 - q
  }

  static Scalar rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
  }

  const Rational& r0() const { return r0_; }
  const Rational& r1() const { return r1_; }

  bool is_zero() const { return r0_ == 0 && r1_ == 0; }
  bool is_rational() const { return r1_ == 0; }
  bool is_one() const { return r1_ == 0 && r0_ == 1; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.r0_ + b.r0_, a.r1_ + b.r1_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.r0_ - b.r0_, a.r1_ - b.r1_);
  }
  Scalar operator-() const { return Scalar(-r0_, -r1_); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    // (a0 + a1 q)(b0 + b1 q), q^2 -> -1 - q
    Rational c2 = a.r1_ * b.r1_;
    return Scalar(a.r0_ * b.r0_ - c2, a.r0_ * b.r1_ + a.r1_ * b.r0_ - c2);
  }

  Scalar inverse() const {
    // multiply by the conjugate a - b - b q; norm a^2 - a b + b^2
    Rational n = r0_ * r0_ - r0_ * r1_ + r1_ * r1_;
    if (n == 0) throw std::domain_error("Scalar: division by zero");
    return Scalar((r0_ - r1_) / n, -r1_ / n);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) {
    r0_ += o.r0_;
    r1_ += o.r1_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    r0_ -= o.r0_;
    r1_ -= o.r1_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.r0_ == b.r0_ && a.r1_ == b.r1_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: rational part first, zero parts omitted, `q` not `q^1`,
  /// rational multiples of q written `c/d*q` so output reparses.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (r0_ != 0) out = r0_.get_str();
    if (r1_ != 0) {
      std::string qpart;
      if (r1_ == 1)
        qpart = "q";
      else if (r1_ == -1)
        qpart = "-q";
      else
        qpart = r1_.get_str() + "*q";
      if (out.empty()) {
        out = qpart;
      } else if (qpart[0] == '-') {
        out += " - " + qpart.substr(1);
      } else {
        out += " + " + qpart;
      }
    }
    return out;
  }

  /// True when str() is a single atom (usable unparenthesized in a product).
  bool is_simple() const {
    return (r0_ == 0) != (r1_ == 0) || is_zero();
  }

 private:
  Rational r0_, r1_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace qps
