#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bivariate.hpp"
#include "generating.hpp"
#include "ratfunc.hpp"

namespace stacklab {

class HolonomicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum_b q[b](x) Y^(b) + inhom(x) = 0.
struct LinearODE {
  std::vector<IntPoly> q;
  IntPoly inhom;
  int order() const { return static_cast<int>(q.size()) - 1; }

  /// Removes the common factor of all coefficients and fixes the sign so
  /// that the top coefficient has a positive leading term.
  void normalize() {
    IntPoly g = inhom;
    for (const auto& c : q) g = gcd(g, c);
    if (g.is_zero()) throw HolonomicError("zero differential operator");
    for (auto& c : q) c = *try_divide(c, g);
    inhom = *try_divide(inhom, g);
    if (q.back().leading() < 0) {
      for (auto& c : q) c = -c;
      inhom = -inhom;
    }
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int b = order(); b >= 0; --b) {
      if (q[static_cast<std::size_t>(b)].is_zero()) continue;
      os << "(" << q[static_cast<std::size_t>(b)].to_string() << ")*Y";
      for (int k = 0; k < b; ++k) os << "'";
      os << " + ";
    }
    os << "(" << inhom.to_string() << ") = 0";
    return os.str();
  }
};

/// sum_{i=0}^{s} p[i](n) y(n + i) = 0 for n >= n0.
struct PRecurrence {
  std::vector<IntPoly> p;
  int n0 = 0;
  std::vector<BigInt> initial;
  int order() const { return static_cast<int>(p.size()) - 1; }

  /// The left-hand side at n; requires y(n + order) to be available.
  BigInt residual(int n, const std::vector<BigInt>& y) const {
    BigInt r = 0;
    const BigInt bn(n);
    for (std::size_t i = 0; i < p.size(); ++i) r += p[i].evaluate(bn) * y.at(static_cast<std::size_t>(n) + i);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
      os << "p" << i << "(n) = " << p[i].to_string("n") << "\n";
    return os.str();
  }
};

namespace detail {

using KPoly = std::vector<RatFunc>;  // polynomial in Y over Q(x), low to high

inline void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline KPoly kmul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  ktrim(r);
  return r;
}

inline KPoly ksub(const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  ktrim(r);
  return r;
}

/// Quotient and remainder of a by b over Q(x).
inline std::pair<KPoly, KPoly> kdivmod(KPoly a, const KPoly& b) {
  ktrim(a);
  if (b.empty()) throw HolonomicError("division by zero polynomial in Y");
  if (a.size() < b.size()) return {{}, a};
  KPoly q(a.size() - b.size() + 1);
  const RatFunc& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const RatFunc t = a[k + b.size() - 1] / lb;
    q[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= t * b[j];
  }
  a.resize(b.size() - 1);
  ktrim(a);
  ktrim(q);
  return {q, a};
}

/// Inverse of g modulo P by the extended Euclidean algorithm.
inline KPoly kinverse_mod(const KPoly& g, const KPoly& P) {
  KPoly r0 = P, r1 = g, s0, s1{RatFunc(1)};
  ktrim(r1);
  while (r1.size() > 1) {
    auto [q, r] = kdivmod(r0, r1);
    KPoly s = ksub(s0, kmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw HolonomicError("P_Z is not invertible modulo P (P not square-free)");
  const RatFunc inv = RatFunc(1) / r1[0];
  for (auto& c : s1) c *= inv;
  return kdivmod(s1, P).second;
}

inline KPoly to_kpoly(const BivarPoly& P) {
  KPoly r;
  for (const auto& c : P.coefficients()) r.emplace_back(c);
  ktrim(r);
  return r;
}

/// Fraction-free row reduction of an integer-polynomial matrix. Returns the
/// pivot columns; the matrix is left in echelon form.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<IntPoly>>& M) {
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<std::size_t> pivots;
  IntPoly prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        IntPoly v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        auto q = try_divide(v, prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        M[i][j] = std::move(*q);
      }
      M[i][c] = IntPoly();
    }
    prev = M[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Finds the lowest-order inhomogeneous linear ODE with polynomial
/// coefficients satisfied by the roots of P, by linear algebra in
/// Q(x)[Y]/(P) on the vectors 1, Y, Y', Y'', ...
inline LinearODE algebraic_to_ode(const BivarPoly& P, int max_order = 8) {
  using namespace detail;
  const int d = P.degree();
  if (d < 1) throw HolonomicError("equation has no Z dependence");
  const KPoly Pk = to_kpoly(P);
  const KPoly Y{RatFunc(0), RatFunc(1)};
  auto reduce = [&](const KPoly& f) { return kdivmod(f, Pk).second; };
  auto eval_in = [&](const BivarPoly& Q) {
    KPoly acc;
    for (int k = Q.degree(); k >= 0; --k) {
      acc = kmul(acc, Y);
      if (acc.empty()) acc.resize(1);
      acc[0] += RatFunc(Q.coeff(k));
      ktrim(acc);
      acc = reduce(acc);
    }
    return acc;
  };
  KPoly dY = reduce(kmul(eval_in(P.derivative_x()), kinverse_mod(eval_in(P.derivative_z()), Pk)));
  for (auto& c : dY) c = -c;
  auto derive = [&](const KPoly& f) {
    KPoly r(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) r[k] = f[k].derivative();
    KPoly fy;
    for (std::size_t k = 1; k < f.size(); ++k) fy.push_back(f[k] * RatFunc(static_cast<long>(k)));
    ktrim(fy);
    KPoly prod = kmul(fy, dY);
    KPoly sum(std::max(r.size(), prod.size()));
    for (std::size_t k = 0; k < sum.size(); ++k) {
      if (k < r.size()) sum[k] += r[k];
      if (k < prod.size()) sum[k] += prod[k];
    }
    ktrim(sum);
    return reduce(sum);
  };

  std::vector<KPoly> cols{KPoly{RatFunc(1)}, reduce(Y)};
  for (int r = 0; r <= max_order; ++r) {
    if (r > 0) cols.push_back(derive(cols.back()));
    // Matrix d x cols with the column denominators cleared.
    std::vector<std::vector<IntPoly>> M(static_cast<std::size_t>(d), std::vector<IntPoly>(cols.size()));
    std::vector<IntPoly> scale(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      IntPoly den(1);
      for (const auto& e : cols[c]) den = *try_divide(den * e.den(), gcd(den, e.den()));
      for (std::size_t k = 0; k < cols[c].size(); ++k)
        M[k][c] = cols[c][k].num() * *try_divide(den, cols[c][k].den());
      scale[c] = den;
    }
    auto E = M;
    auto piv = bareiss_echelon(E);
    if (piv.size() == cols.size()) continue;
    // The new column is the first dependent one; back-substitute over Q(x).
    const std::size_t n = cols.size();
    std::vector<RatFunc> x(n);
    x[n - 1] = RatFunc(1);
    for (std::size_t i = piv.size(); i-- > 0;) {
      const std::size_t c = piv[i];
      RatFunc s;
      for (std::size_t j = c + 1; j < n; ++j)
        if (!E[i][j].is_zero() && !x[j].is_zero()) s += RatFunc(E[i][j]) * x[j];
      x[c] = -s / RatFunc(E[i][c]);
    }
    // Column c was scaled by scale[c]; undo that on the kernel vector.
    for (std::size_t c = 0; c < n; ++c) x[c] *= RatFunc(scale[c]);
    IntPoly den(1);
    for (const auto& e : x) den = *try_divide(den * e.den(), gcd(den, e.den()));
    LinearODE ode;
    ode.inhom = x[0].num() * *try_divide(den, x[0].den());
    for (std::size_t j = 1; j < n; ++j) ode.q.push_back(x[j].num() * *try_divide(den, x[j].den()));
    ode.normalize();
    return ode;
  }
  throw HolonomicError("no linear relation up to order " + std::to_string(max_order));
}

/// Applies the operator to a truncated series; the result is exact through
/// order N - r.
inline Series apply_ode(const LinearODE& ode, const Series& y) {
  const int r = ode.order();
  const int N = y.order() - r;
  if (N < 0) throw HolonomicError("series too short for the operator");
  Series acc = Series::from_polynomial(ode.inhom, N);
  Series dy = y;
  for (int b = 0; b <= r; ++b) {
    acc += Series::from_polynomial(ode.q[static_cast<std::size_t>(b)], N) * dy.truncated(N);
    if (b < r) dy = dy.derivative();
  }
  return acc;
}

/// The displayed second-order equation for zigzag stacks.
inline LinearODE printed_ode_z() {
  using namespace eqn;
  LinearODE ode;
  ode.q.resize(3);
  ode.q[2] = X(2) * (C(23) * X(3) - C(26) * X(2) + C(23) * X() - C(4)) * (C(4) * X(2) + X() - C(1)) * (X() - C(1));
  ode.q[1] = X() * (C(368) * X(6) - C(433) * X(5) + C(108) * X(4) + C(260) * X(3) - C(258) * X(2) + C(93) * X() - C(10));
  ode.q[0] = C(184) * X(6) - C(87) * X(5) - C(117) * X(4) + C(217) * X(3) - C(129) * X(2) + C(30) * X() - C(2);
  ode.inhom = C(-2) * (C(25) * X(2) - C(8) * X() + C(1)) * (X() - C(1));
  return ode;
}

/// The displayed seven-term recurrence for z(n).
inline PRecurrence printed_recurrence_z() {
  auto q = [](long a, long b, long c) { return IntPoly({BigInt(a), BigInt(b), BigInt(c)}); };
  PRecurrence rec;
  rec.p = {q(184, 276, 92),   q(-520, -606, -173), q(347, 480, 124), q(937, 210, -10),
           q(-1881, -678, -60), q(1115, 372, 31),   q(-182, -54, -4)};
  return rec;
}

/// Coefficient extraction: x^a D^b acts on [x^n] as (n-a+1)...(n-a+b) y(n-a+b).
/// The result holds for n >= n0, the first index past the inhomogeneous part.
inline PRecurrence ode_to_recurrence(const LinearODE& ode) {
  int smin = 0, smax = 0;
  bool first = true;
  for (int b = 0; b <= ode.order(); ++b) {
    const auto& qb = ode.q[static_cast<std::size_t>(b)];
    for (int a = 0; a <= qb.degree(); ++a) {
      if (qb.coeff(static_cast<std::size_t>(a)) == 0) continue;
      const int s = b - a;
      if (first || s < smin) smin = s;
      if (first || s > smax) smax = s;
      first = false;
    }
  }
  if (first) throw HolonomicError("zero operator");
  PRecurrence rec;
  rec.p.assign(static_cast<std::size_t>(smax - smin + 1), IntPoly());
  const IntPoly n = IntPoly::x();
  for (int b = 0; b <= ode.order(); ++b) {
    const auto& qb = ode.q[static_cast<std::size_t>(b)];
    for (int a = 0; a <= qb.degree(); ++a) {
      const BigInt& c = qb.coeff(static_cast<std::size_t>(a));
      if (c == 0) continue;
      // With n = k - smin, the factor is prod_{t=1..b} (k - smin - a + t).
      IntPoly f(c);
      for (int t = 1; t <= b; ++t) f *= n + IntPoly(BigInt(t - smin - a));
      rec.p[static_cast<std::size_t>(b - a - smin)] += f;
    }
  }
  while (rec.p.size() > 1 && rec.p.back().is_zero()) rec.p.pop_back();
  int lead_zero = 0;
  while (lead_zero + 1 < static_cast<int>(rec.p.size()) && rec.p[static_cast<std::size_t>(lead_zero)].is_zero()) ++lead_zero;
  // Dropping zero low coefficients re-indexes k -> k + lead_zero.
  if (lead_zero > 0) {
    std::vector<IntPoly> p;
    const IntPoly shift = n - IntPoly(BigInt(lead_zero));
    for (std::size_t i = static_cast<std::size_t>(lead_zero); i < rec.p.size(); ++i) {
      IntPoly composed;
      for (int k = rec.p[i].degree(); k >= 0; --k) composed = composed * shift + IntPoly(rec.p[i].coeff(static_cast<std::size_t>(k)));
      p.push_back(composed);
    }
    rec.p = std::move(p);
    smin += lead_zero;
  }
  rec.n0 = std::max(0, ode.inhom.degree() + 1 + smin);
  return rec;
}

/// Extends terms to indices 0..N. Terms already given are kept.
inline std::vector<BigInt> eval_recurrence(const PRecurrence& rec, std::vector<BigInt> terms, int N) {
  const int s = rec.order();
  if (static_cast<int>(terms.size()) < s + rec.n0 && static_cast<int>(terms.size()) <= N)
    throw HolonomicError("need at least " + std::to_string(s + rec.n0) + " initial terms");
  for (int k = static_cast<int>(terms.size()); k <= N; ++k) {
    const int n = k - s;
    const BigInt bn(n);
    const BigInt lead = rec.p.back().evaluate(bn);
    if (lead == 0) throw HolonomicError("leading coefficient vanishes at n = " + std::to_string(n));
    BigInt acc = 0;
    for (int i = 0; i < s; ++i) acc += rec.p[static_cast<std::size_t>(i)].evaluate(bn) * terms[static_cast<std::size_t>(n + i)];
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
      throw HolonomicError("non-integral term at index " + std::to_string(k));
    terms.push_back(-acc / lead);
  }
  terms.resize(static_cast<std::size_t>(N) + 1);
  return terms;
}

/// Indices n in [lo, hi] with nonzero residual; y must reach hi + order.
inline std::vector<int> recurrence_failures(const PRecurrence& rec, const std::vector<BigInt>& y, int lo, int hi) {
  std::vector<int> bad;
  for (int n = lo; n <= hi; ++n)
    if (rec.residual(n, y) != 0) bad.push_back(n);
  return bad;
}

/// Smallest n0 such that the recurrence holds on [n0, hi].
inline int measured_threshold(const PRecurrence& rec, const std::vector<BigInt>& y, int hi) {
  int n0 = 0;
  for (int n = 0; n <= hi; ++n)
    if (rec.residual(n, y) != 0) n0 = n + 1;
  return n0;
}

/// Coefficients 0..N of the branch through c0, from a short series and the
/// recurrence derived from P.
inline std::vector<BigInt> coefficients_via_recurrence(const BivarPoly& P, const Rational& c0, int N) {
  const PRecurrence rec = ode_to_recurrence(algebraic_to_ode(P));
  const int init = std::min(N, rec.order() + rec.n0);
  std::vector<BigInt> head = solve_counting(P, c0, init).coefficients();
  head.resize(static_cast<std::size_t>(init) + 1);
  return eval_recurrence(rec, std::move(head), N);
}

struct RecurrenceReport {
  int window_lo = 0, window_hi = 0;
  std::vector<int> nonzero;  // indices with nonzero residual
  int threshold = 0;         // holds for all n >= threshold inside the window
};

/// Evaluates the displayed z recurrence on the solved series for n in 0..hi.
inline RecurrenceReport verify_printed_recurrence_z(int hi = 200) {
  const PRecurrence rec = printed_recurrence_z();
  IntSeries z = series_z(hi + rec.order());
  RecurrenceReport rep;
  rep.window_hi = hi;
  rep.nonzero = recurrence_failures(rec, z.coefficients(), 0, hi);
  rep.threshold = measured_threshold(rec, z.coefficients(), hi);
  return rep;
}

}  // namespace stacklab
