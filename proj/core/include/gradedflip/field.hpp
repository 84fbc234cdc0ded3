#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gradedflip/error.hpp"

namespace gradedflip {

/// Coefficient field descriptor: the rationals or a prime field GF(p).
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p) {
    if (p < 2) throw structural_error("prime field characteristic must be >= 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw structural_error("GF(" + std::to_string(p) + "): not a prime");
    return Field(p);
  }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const { return is_rational() ? "Q" : "GF " + std::to_string(p_); }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An element of the coefficient field. Exact; no floating point anywhere.
class Scalar {
public:
  explicit Scalar(Field f) : field_(f), q_(0), r_(0) {}

  static Scalar from_int(Field f, long n) {
    Scalar s(f);
    if (f.is_rational()) {
      s.q_ = n;
    } else {
      long p = static_cast<long>(f.characteristic());
      long m = n % p;
      if (m < 0) m += p;
      s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
  }
  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }

  Field field() const { return field_; }
  bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

  Scalar operator-() const {
    Scalar s(*this);
    if (field_.is_rational())
      s.q_ = -q_;
    else if (r_ != 0)
      s.r_ = field_.characteristic() - r_;
    return s;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.is_rational())
      s.q_ = q_ + o.q_;
    else
      s.r_ = (r_ + o.r_) % field_.characteristic();
    return s;
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.is_rational())
      s.q_ = q_ * o.q_;
    else
      s.r_ = (r_ * o.r_) % field_.characteristic();
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw structural_error("division by zero");
    Scalar s(field_);
    if (field_.is_rational()) {
      s.q_ = 1 / q_;
    } else {
      // extended Euclid mod p
      std::int64_t p = field_.characteristic();
      std::int64_t a = static_cast<std::int64_t>(r_), b = p, x0 = 1, x1 = 0;
      while (b != 0) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        x0 -= t * x1;
        std::swap(x0, x1);
      }
      x0 %= p;
      if (x0 < 0) x0 += p;
      s.r_ = static_cast<std::uint64_t>(x0);
    }
    return s;
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// True for 1 and -1 (and any unit of GF(p) is invertible anyway).
  bool is_rational_unit() const {
    if (!field_.is_rational()) return !is_zero();
    return q_ == 1 || q_ == -1;
  }

  std::string str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
  }

  /// Exposed for hashing / canonical output only.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw structural_error("mixed coefficient fields");
  }
  Field field_;
  mpq_class q_;
  std::uint64_t r_;
};

}  // namespace gradedflip
