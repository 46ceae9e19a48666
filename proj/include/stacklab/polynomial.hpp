#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace stacklab {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace detail {

inline std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Packs signed coefficients into one integer: sum c_i * 2^(64 * limbs * i).
inline BigInt kronecker_pack(const std::vector<BigInt>& coeffs, std::size_t limbs) {
  const std::size_t total = coeffs.size() * limbs;
  std::vector<mp_limb_t> pos(total, 0), neg(total, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int s = sgn(coeffs[i]);
    if (s == 0) continue;
    std::size_t count = 0;
    mp_limb_t* slot = (s > 0 ? pos.data() : neg.data()) + i * limbs;
    if (mpz_size(coeffs[i].get_mpz_t()) > limbs)
      throw std::logic_error("kronecker_pack: slot too narrow");
    mpz_export(slot, &count, -1, sizeof(mp_limb_t), 0, 0, coeffs[i].get_mpz_t());
    any_neg = any_neg || s < 0;
  }
  BigInt p, n;
  mpz_import(p.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    mpz_import(n.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, neg.data());
    p -= n;
  }
  return p;
}

// Inverse of kronecker_pack using balanced digits in (-2^(B-1), 2^(B-1)].
inline std::vector<BigInt> kronecker_unpack(const BigInt& w, std::size_t limbs,
                                            std::size_t slots) {
  std::vector<BigInt> out(slots);
  if (w == 0) return out;
  const int s = sgn(w);
  const std::size_t wl = mpz_size(w.get_mpz_t());
  std::vector<mp_limb_t> buf(std::max(wl, slots * limbs) + limbs, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, w.get_mpz_t());
  const std::size_t bits = 64 * limbs;
  BigInt half, full;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  mpz_setbit(full.get_mpz_t(), bits);
  int carry = 0;
  for (std::size_t i = 0; i < slots; ++i) {
    BigInt v;
    mpz_import(v.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    v += carry;
    if (v > half) {
      v -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = s > 0 ? v : BigInt(-v);
  }
  if (carry != 0) throw std::logic_error("kronecker_unpack: overflow past last slot");
  return out;
}

inline std::size_t limbs_for_bits(std::size_t bits) { return bits / 64 + 1; }

}  // namespace detail

/// Dense univariate polynomial, coefficients stored from the constant term up.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const T& c) {  // NOLINT: constants promote implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  Polynomial(int c) : Polynomial(T(c)) {}  // NOLINT
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const T& c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<T> v(exponent + 1, T(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  const T& coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero(); }
  const T& leading() const { return coeffs_.empty() ? zero() : coeffs_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  template <class U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(v));
  }

  Polynomial shifted(std::size_t k) const {  // multiply by x^k
    if (is_zero() || k == 0) return *this;
    std::vector<T> v(k, T(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// Keeps the terms of exponent < n.
  Polynomial truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return Polynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + n));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return Polynomial(multiply(a.coeffs_, b.coeffs_));
  }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned k) const {
    Polynomial r(T(1)), b = *this;
    while (k) {
      if (k & 1U) r *= b;
      k >>= 1U;
      if (k) b *= b;
    }
    return r;
  }

  /// Product of coefficient vectors; big integer inputs of moderate size go
  /// through Kronecker substitution so GMP's fast multiplication does the work.
  static std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    if constexpr (std::is_same_v<T, BigInt>) {
      if (std::min(a.size(), b.size()) >= 12) return kronecker_multiply(a, b);
    }
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const T& c = coeffs_[i];
      if (c == 0) continue;
      T a = c < 0 ? T(-c) : c;
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (i == 0 || a != 1) os << a.get_str();
      if (i > 0) {
        if (a != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static const T& zero() {
    static const T z(0);
    return z;
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static std::vector<T> kronecker_multiply(const std::vector<T>& a, const std::vector<T>& b)
    requires std::is_same_v<T, BigInt>
  {
    std::size_t ba = 0, bb = 0;
    for (const auto& v : a) ba = std::max(ba, detail::bit_length(v));
    for (const auto& v : b) bb = std::max(bb, detail::bit_length(v));
    const std::size_t bound = ba + bb + detail::bit_length(BigInt(static_cast<unsigned long>(std::min(a.size(), b.size())))) + 2;
    const std::size_t limbs = detail::limbs_for_bits(bound);
    BigInt w = detail::kronecker_pack(a, limbs) * detail::kronecker_pack(b, limbs);
    return detail::kronecker_unpack(w, limbs, a.size() + b.size() - 1);
  }

  std::vector<T> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content; the result has a positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v = p.coefficients();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

inline IntPoly divexact(const IntPoly& p, const BigInt& c) {
  std::vector<BigInt> v = p.coefficients();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

/// Quotient a / b in Z[x] when b divides a exactly, nullopt otherwise.
inline std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("try_divide: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(r.size() - db);
  const BigInt& lb = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b.coeff(j);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.leading();
  for (std::size_t top = r.size(); top-- > db;) {
    BigInt t = r[top];
    for (auto& c : r) c *= lb;
    if (t != 0)
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * b.coeff(j);
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

namespace detail {

inline IntPoly gcd_prs(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  BigInt c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return a * c;
}

inline BigInt max_norm(const IntPoly& p) {
  BigInt m = 0;
  for (const auto& c : p.coefficients())
    if (abs(c) > m) m = abs(c);
  return m;
}

}  // namespace detail

/// Greatest common divisor in Z[x] with a positive leading coefficient.
/// Heuristic evaluation at a power of two (GCDHEU), verified by division,
/// with a primitive PRS fallback.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : (b.leading() < 0 ? -b : b);
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  BigInt cg = gcd(content(a), content(b));
  if (a.degree() == 0 || b.degree() == 0) return IntPoly(cg);
  IntPoly pa = primitive_part(a), pb = primitive_part(b);
  std::size_t bits = std::max(detail::bit_length(detail::max_norm(pa)),
                              detail::bit_length(detail::max_norm(pb))) + 3;
  for (int attempt = 0; attempt < 4; ++attempt, bits = bits * 2 + 17) {
    const std::size_t limbs = detail::limbs_for_bits(bits);
    BigInt va = detail::kronecker_pack(pa.coefficients(), limbs);
    BigInt vb = detail::kronecker_pack(pb.coefficients(), limbs);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    const std::size_t slots = mpz_size(g.get_mpz_t()) / limbs + 2;
    IntPoly cand(detail::kronecker_unpack(g, limbs, slots));
    if (cand.is_zero()) continue;
    cand = primitive_part(cand);
    if (cand.degree() > std::min(pa.degree(), pb.degree())) continue;
    if (try_divide(pa, cand) && try_divide(pb, cand)) return cand * cg;
  }
  return detail::gcd_prs(pa, pb) * cg;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  return os << p.to_string();
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

/// Clears denominators: returns (q, d) with d * p = q, q integral and d > 0.
inline std::pair<IntPoly, BigInt> clear_denominators(const RatPoly& p) {
  BigInt d = 1;
  for (const auto& c : p.coefficients()) d = lcm(d, BigInt(c.get_den()));
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.push_back(c.get_num() * (d / c.get_den()));
  return {IntPoly(std::move(v)), d};
}

}  // namespace stacklab
