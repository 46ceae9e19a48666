#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace stacklab {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N, known modulo x^(N+1).
/// Binary operations truncate to the smaller order of their operands.
template <class T>
class BasicSeries {
 public:
  BasicSeries() = default;
  explicit BasicSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, T(0)) {
    if (order < 0) throw SeriesError("series order must be nonnegative");
  }
  BasicSeries(std::vector<T> coeffs, int order) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw SeriesError("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, T(0));
  }
  static BasicSeries constant(const T& c, int order) {
    BasicSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static BasicSeries from_polynomial(const Polynomial<T>& p, int order) {
    BasicSeries s(order);
    for (std::size_t i = 0; i < std::min(p.size(), s.coeffs_.size()); ++i) s.coeffs_[i] = p.coeff(i);
    return s;
  }
  template <class U>
  static BasicSeries from_polynomial(const Polynomial<U>& p, int order) {
    BasicSeries s(order);
    for (std::size_t i = 0; i < std::min(p.size(), s.coeffs_.size()); ++i) s.coeffs_[i] = T(p.coeff(i));
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  T& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  BasicSeries truncated(int order) const {
    if (order > this->order()) throw SeriesError("cannot extend a truncated series");
    return BasicSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
  }

  /// Multiplies by x^k; the order is kept, high terms fall off.
  BasicSeries shifted(int k) const {
    BasicSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
  }

  BasicSeries derivative() const {
    if (order() == 0) return BasicSeries(0);
    BasicSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * T(i);
    return r;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c == 0; });
  }
  /// Index of the first nonzero coefficient, or -1.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend BasicSeries operator-(BasicSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> av(a.coeffs_.begin(), a.coeffs_.begin() + n + 1);
    std::vector<T> bv(b.coeffs_.begin(), b.coeffs_.begin() + n + 1);
    auto prod = Polynomial<T>::multiply(av, bv);
    prod.resize(static_cast<std::size_t>(n) + 1, T(0));
    return BasicSeries(std::move(prod), n);
  }
  friend BasicSeries operator*(BasicSeries a, const T& c) {
    for (auto& v : a.coeffs_) v *= c;
    return a;
  }
  friend BasicSeries operator*(const T& c, BasicSeries a) { return std::move(a) * c; }
  friend BasicSeries operator+(BasicSeries a, const T& c) {
    a.coeffs_[0] += c;
    return a;
  }
  friend BasicSeries operator+(const T& c, BasicSeries a) { return std::move(a) + c; }
  friend BasicSeries operator-(const T& c, const BasicSeries& a) { return -a + c; }
  friend BasicSeries operator-(BasicSeries a, const T& c) {
    a.coeffs_[0] -= c;
    return a;
  }
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) = default;

  BasicSeries& operator+=(const BasicSeries& o) { return *this = *this + o; }
  BasicSeries& operator-=(const BasicSeries& o) { return *this = *this - o; }
  BasicSeries& operator*=(const BasicSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse by Newton iteration b <- b(2 - ab).
  /// Requires an invertible constant term (a unit, for integer series).
  BasicSeries inverse() const {
    const T& c0 = coeffs_[0];
    if (c0 == 0) throw SeriesError("inverse of a series with zero constant term");
    T b0;
    if constexpr (std::is_same_v<T, BigInt>) {
      if (c0 != 1 && c0 != -1) throw SeriesError("integer series inverse needs a unit constant term");
      b0 = c0;
    } else {
      b0 = T(1) / c0;
    }
    BasicSeries b = constant(b0, 0);
    int prec = 0;
    while (prec < order()) {
      prec = std::min(2 * prec + 1, order());
      BasicSeries a = truncated(prec);
      BasicSeries bb(b.coeffs_, prec);
      BasicSeries e = T(2) - a * bb;
      b = bb * e;
    }
    return b;
  }

  friend BasicSeries operator/(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    return a.truncated(n) * b.truncated(n).inverse();
  }

  /// Square root with the positive-constant branch. A zero prefix of even
  /// length is allowed; the result then loses that many orders of precision.
  BasicSeries sqrt() const {
    const int v = valuation();
    if (v < 0) return *this;
    if (v % 2 != 0) throw SeriesError("sqrt of a series with odd valuation");
    BasicSeries a(std::vector<T>(coeffs_.begin() + v, coeffs_.end()), order() - v);
    T r0;
    if constexpr (std::is_same_v<T, Rational>) {
      BigInt num = a[0].get_num(), den = a[0].get_den();
      if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw SeriesError("sqrt needs a perfect-square leading coefficient");
      BigInt rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      r0 = Rational(rn, rd);
    } else {
      if (a[0] != 1) throw SeriesError("integer series sqrt needs constant term 1");
      r0 = 1;
    }
    BasicSeries r = constant(r0, 0);
    int prec = 0;
    while (prec < a.order()) {
      prec = std::min(2 * prec + 1, a.order());
      BasicSeries rr(r.coeffs_, prec);
      if constexpr (std::is_same_v<T, BigInt>) {
        BasicSeries corr = (a.truncated(prec) - rr * rr) / rr;
        for (auto& c : corr.coeffs_) {
          if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw SeriesError("square root is not an integer series");
          c /= 2;
        }
        r = rr + corr;
      } else {
        r = rr + (a.truncated(prec) - rr * rr) / (rr * T(2));
      }
    }
    std::vector<T> out(static_cast<std::size_t>(v / 2), T(0));
    out.insert(out.end(), r.coeffs_.begin(), r.coeffs_.end());
    return BasicSeries(std::move(out), order() - v / 2);
  }

  std::string to_string(int terms = 8) const {
    std::string s;
    for (int i = 0; i <= std::min(order(), terms - 1); ++i) {
      if (i) s += ", ";
      s += coeffs_[static_cast<std::size_t>(i)].get_str();
    }
    if (order() >= terms) s += ", ...";
    return s;
  }

 private:
  std::vector<T> coeffs_;
};

using Series = BasicSeries<Rational>;
using IntSeries = BasicSeries<BigInt>;

inline Series to_rational(const IntSeries& s) {
  std::vector<Rational> v;
  v.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) v.emplace_back(c);
  return Series(std::move(v), s.order());
}

/// Exact conversion; throws when a coefficient is not an integer.
inline IntSeries to_integral(const Series& s) {
  std::vector<BigInt> v;
  v.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) {
    if (c.get_den() != 1) throw SeriesError("series has a non-integral coefficient");
    v.push_back(c.get_num());
  }
  return IntSeries(std::move(v), s.order());
}

/// 1 + x + ... + x^(k-1), i.e. (1 - x^k)/(1 - x); zero when k <= 0.
template <class T>
BasicSeries<T> geometric_block(int k, int order) {
  BasicSeries<T> s(order);
  for (int i = 0; i < std::min(k, order + 1); ++i) s[static_cast<std::size_t>(i)] = 1;
  return s;
}

}  // namespace stacklab
