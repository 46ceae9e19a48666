#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "polynomial.hpp"

namespace stacklab {

/// An element of Q(x) held as num/den over Z[x], with gcd(num, den) = 1 in
/// Z[x] and a positive leading coefficient on den.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const IntPoly& num) : num_(num), den_(1) {}  // NOLINT(implicit)
  RatFunc(long c) : num_(BigInt(c)), den_(1) {}        // NOLINT(implicit)
  RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first to keep the products small.
    IntPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    IntPoly n = *try_divide(a.num_, g1) * *try_divide(b.num_, g2);
    IntPoly d = *try_divide(a.den_, g2) * *try_divide(b.den_, g1);
    return RatFunc(std::move(n), std::move(d));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * RatFunc(b.den_, b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  std::string to_string() const {
    if (den_ == IntPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
      num_ = *try_divide(num_, g);
      den_ = *try_divide(den_, g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPoly num_, den_;
};

}  // namespace stacklab
