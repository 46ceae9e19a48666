#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "series.hpp"

namespace stacklab {

/// P(x, Z) = sum_k a_k(x) Z^k with integer polynomial coefficients.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<IntPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const IntPoly& coeff(int k) const {
    static const IntPoly zero;
    return (k < 0 || k > degree()) ? zero : coeffs_[static_cast<std::size_t>(k)];
  }
  const std::vector<IntPoly>& coefficients() const { return coeffs_; }
  /// Largest x-degree over all a_k.
  int x_degree() const {
    int d = -1;
    for (const auto& a : coeffs_) d = std::max(d, a.degree());
    return d;
  }

  BivarPoly derivative_z() const {
    std::vector<IntPoly> out;
    for (int k = 1; k <= degree(); ++k) out.push_back(coeff(k) * BigInt(k));
    return BivarPoly(std::move(out));
  }
  BivarPoly derivative_x() const {
    std::vector<IntPoly> out;
    for (const auto& a : coeffs_) out.push_back(a.derivative());
    return BivarPoly(std::move(out));
  }

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<IntPoly> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(int(k)) + b.coeff(int(k));
    return BivarPoly(std::move(out));
  }
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    std::vector<IntPoly> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(int(k)) - b.coeff(int(k));
    return BivarPoly(std::move(out));
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<IntPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BivarPoly(std::move(out));
  }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Substitutes Z = q(x) for a polynomial q, giving a polynomial in x.
  IntPoly compose(const IntPoly& q) const {
    IntPoly r;
    for (int k = degree(); k >= 0; --k) r = r * q + coeff(k);
    return r;
  }
  /// Rewrites P(x, Z) as P(x, (u(x) + v(x) W) / w(x)) * w(x)^d, a polynomial in W.
  BivarPoly substitute_linear(const IntPoly& u, const IntPoly& v, const IntPoly& w) const {
    const int d = degree();
    BivarPoly result;
    BivarPoly lin(std::vector<IntPoly>{u, v});
    std::vector<BivarPoly> lin_pow{BivarPoly(std::vector<IntPoly>{IntPoly(1)})};
    for (int k = 1; k <= d; ++k) lin_pow.push_back(lin_pow.back() * lin);
    std::vector<IntPoly> w_pow{IntPoly(1)};
    for (int k = 1; k <= d; ++k) w_pow.push_back(w_pow.back() * w);
    for (int k = 0; k <= d; ++k)
      result = result + BivarPoly(std::vector<IntPoly>{coeff(k) * w_pow[static_cast<std::size_t>(d - k)]}) * lin_pow[static_cast<std::size_t>(k)];
    return result;
  }

  /// Evaluates at a series argument by Horner's rule in Z.
  template <class T>
  BasicSeries<T> evaluate(const BasicSeries<T>& y) const {
    const int n = y.order();
    BasicSeries<T> r(n);
    for (int k = degree(); k >= 0; --k) r = r * y + BasicSeries<T>::from_polynomial(coeff(k), n);
    return r;
  }
  /// Evaluates at a point of any ring that accepts integer coefficients.
  template <class U>
  U evaluate(const U& x, const U& z) const {
    U r(0);
    for (int k = degree(); k >= 0; --k) {
      U a(0);
      const auto& c = coeff(k).coefficients();
      for (std::size_t i = c.size(); i-- > 0;) a = a * x + U(c[i]);
      r = r * z + a;
    }
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (coeff(k).is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeff(k).to_string() + ")";
      if (k >= 1) s += "*Z";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<IntPoly> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.to_string(); }

}  // namespace stacklab
