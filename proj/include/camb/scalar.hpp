#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace camb {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of the real quadratic field Q(sqrt(d)): value = rat + surd*sqrt(d).
///
/// d is a fixed square-free positive integer chosen once per group; d == 1
/// means plain rationals. The invariant surd == 0 => d == 1 keeps plain
/// rationals field-agnostic, so integers and rationals mix freely with any
/// group's scalars. Arithmetic is exact and closed; sign() is exactly
/// decidable by squaring out the surd.
class Scalar {
 public:
  Scalar() : rat_(0), surd_(0), d_(1) {}
  Scalar(int v) : rat_(v), surd_(0), d_(1) {}  // NOLINT: implicit by design
  Scalar(long v) : rat_(v), surd_(0), d_(1) {}
  Scalar(Rat v) : rat_(std::move(v)), surd_(0), d_(1) {}
  Scalar(Rat rat, Rat surd, int d) : rat_(std::move(rat)), surd_(std::move(surd)), d_(d) {
    if (d_ <= 0) throw std::invalid_argument("Scalar: d must be positive");
    normalize();
  }

  static Scalar sqrt_of(int d) { return Scalar(Rat(0), Rat(1), d); }

  const Rat& rat() const { return rat_; }
  const Rat& surd() const { return surd_; }
  int d() const { return d_; }
  bool is_rational() const { return surd_ == 0; }
  bool is_zero() const { return rat_ == 0 && surd_ == 0; }
  bool is_integer() const { return surd_ == 0 && boost::multiprecision::denominator(rat_) == 1; }

  /// Exact sign: -1, 0, +1.
  int sign() const {
    const int sr = cmp0(rat_);
    const int ss = cmp0(surd_);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // rat and surd*sqrt(d) have opposite signs: compare squares.
    // |rat| vs |surd|*sqrt(d)  <=>  rat^2 vs surd^2*d.
    const Rat lhs = rat_ * rat_;
    const Rat rhs = surd_ * surd_ * d_;
    if (lhs == rhs) return 0;  // only possible if sqrt(d) rational; d square-free > 1 excludes it
    return lhs > rhs ? sr : ss;
  }

  Scalar operator-() const { return Scalar(-rat_, -surd_, d_); }

  Scalar& operator+=(const Scalar& o) {
    const int d = joint_d(o);
    rat_ += o.rat_;
    surd_ += o.surd_;
    d_ = d;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    const int d = joint_d(o);
    Rat r = rat_ * o.rat_ + surd_ * o.surd_ * d;
    Rat s = rat_ * o.surd_ + surd_ * o.rat_;
    rat_ = std::move(r);
    surd_ = std::move(s);
    d_ = d;
    normalize();
    return *this;
  }

  /// Multiplicative inverse of a nonzero element: conjugate over norm.
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    const Rat norm = rat_ * rat_ - surd_ * surd_ * d_;
    if (norm == 0) throw std::logic_error("Scalar: zero field norm for nonzero element (d not square-free?)");
    return Scalar(rat_ / norm, -surd_ / norm, d_);
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_ && (a.surd_ == 0 || a.d_ == b.d_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

  double to_double() const {
    double x = rat_.convert_to<double>();
    if (surd_ != 0) x += surd_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
    return x;
  }

  std::string str() const {
    if (surd_ == 0) return rat_.str();
    std::string s;
    if (rat_ != 0) s += rat_.str() + (surd_ > 0 ? "+" : "");
    s += surd_.str() + "*sqrt(" + std::to_string(d_) + ")";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static int cmp0(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

  void normalize() {
    if (surd_ == 0) d_ = 1;
  }
  int joint_d(const Scalar& o) const {
    if (surd_ == 0) return o.surd_ == 0 ? std::max(d_, o.d_) : o.d_;
    if (o.surd_ == 0) return d_;
    if (d_ != o.d_) throw std::logic_error("Scalar: mixed quadratic fields");
    return d_;
  }

  Rat rat_, surd_;
  int d_;
};

}  // namespace camb
