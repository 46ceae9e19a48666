#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "bivariate.hpp"
#include "polynomial.hpp"

namespace stacklab {

using Real = boost::multiprecision::mpfr_float;

class AsymptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}
inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// Decimal rendering with the given number of significant digits.
inline std::string decimal(const Real& r, int digits) {
  return r.str(digits, std::ios_base::fmtflags(0));
}

/// Sets the working precision of newly created reals for a scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : saved_(Real::default_precision()) { Real::default_precision(static_cast<unsigned>(digits)); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

namespace detail {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// Determinant by fraction-free elimination with row swaps.
inline IntPoly determinant(PolyMatrix M) {
  const std::size_t n = M.size();
  IntPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && M[piv][k].is_zero()) ++piv;
    if (piv == n) return IntPoly();
    if (piv != k) {
      std::swap(M[piv], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = try_divide(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
        if (!q) throw std::logic_error("determinant: inexact division");
        M[i][j] = std::move(*q);
      }
      M[i][k] = IntPoly();
    }
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

}  // namespace detail

/// Resultant with respect to Z, from the Sylvester matrix.
inline IntPoly resultant_z(const BivarPoly& P, const BivarPoly& Q) {
  const int p = P.degree(), q = Q.degree();
  if (p < 1 || q < 0) throw AsymptError("resultant needs positive degree in Z");
  if (q == 0) return Q.coeff(0).pow(static_cast<unsigned>(p));
  const std::size_t n = static_cast<std::size_t>(p + q);
  detail::PolyMatrix M(n, std::vector<IntPoly>(n));
  for (int r = 0; r < q; ++r)
    for (int k = 0; k <= p; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + p - k)] = P.coeff(k);
  for (int r = 0; r < p; ++r)
    for (int k = 0; k <= q; ++k) M[static_cast<std::size_t>(q + r)][static_cast<std::size_t>(r + q - k)] = Q.coeff(k);
  return detail::determinant(std::move(M));
}

inline IntPoly discriminant_z(const BivarPoly& P) { return resultant_z(P, P.derivative_z()); }

inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  return primitive_part(*try_divide(p, gcd(p, p.derivative())));
}

namespace detail {

inline std::vector<BigInt> taylor_shift1(std::vector<BigInt> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
  return a;
}

inline int sign_variations(const std::vector<BigInt>& a) {
  int v = 0, last = 0;
  for (const auto& c : a) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Upper bound on the number of roots of q in (0, 1) (exact when 0 or 1).
inline int descartes_unit(const std::vector<BigInt>& q) {
  std::vector<BigInt> r(q.rbegin(), q.rend());
  return sign_variations(taylor_shift1(std::move(r)));
}

/// Sign of p at c / 2^k, evaluated exactly.
inline int sign_at(const IntPoly& p, const BigInt& c, unsigned long k) {
  BigInt acc = 0, scale = 1;
  const int d = p.degree();
  // sum p_i c^i 2^(k(d-i))
  for (int i = d; i >= 0; --i) {
    acc = acc * c + p.coeff(static_cast<std::size_t>(i)) * scale;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
  }
  return sgn(acc);
}

}  // namespace detail

/// A root of a polynomial in an interval (lo, hi), or exactly at lo when
/// exact is set.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
};

/// Isolates the real roots of a square-free p in (0, 1] by Descartes'
/// rule of signs with interval bisection.
inline std::vector<RootInterval> isolate_unit_roots(const IntPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  struct Node {
    std::vector<BigInt> q;
    BigInt c;
    unsigned long k;  // interval (c/2^k, (c+1)/2^k)
  };
  std::vector<Node> todo{{p.coefficients(), 0, 0}};
  while (!todo.empty()) {
    Node nd = std::move(todo.back());
    todo.pop_back();
    auto& q = nd.q;
    const Rational lo(nd.c, BigInt(1) << nd.k), hi(nd.c + 1, BigInt(1) << nd.k);
    if (q.front() == 0) {
      if (nd.c != 0) out.push_back({lo, lo, true});
      q.erase(q.begin());
    }
    const int v = detail::descartes_unit(q);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({lo, hi, false});
      continue;
    }
    const std::size_t d = q.size() - 1;
    std::vector<BigInt> left(q.size());
    for (std::size_t i = 0; i <= d; ++i) {
      left[i] = q[i];
      mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), d - i);
    }
    std::vector<BigInt> right = detail::taylor_shift1(left);
    todo.push_back({std::move(right), 2 * nd.c + 1, nd.k + 1});
    todo.push_back({std::move(left), 2 * nd.c, nd.k + 1});
  }
  if (p.evaluate(BigInt(1)) == 0) out.push_back({Rational(1), Rational(1), true});
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

/// Halves an isolating interval until it is narrower than 2^-bits.
inline RootInterval refine_root(const IntPoly& p, RootInterval r, unsigned long bits) {
  if (r.exact) return r;
  // Work with dyadic endpoints c/2^k.
  unsigned long k = 0;
  BigInt c;
  {
    BigInt den = r.lo.get_den();
    k = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    c = r.lo.get_num();
  }
  int slo = detail::sign_at(p, c, k);
  while (k < bits) {
    c *= 2;
    ++k;
    const BigInt mid = c + 1;
    const int sm = detail::sign_at(p, mid, k);
    if (sm == 0) return {Rational(mid, BigInt(1) << k), Rational(mid, BigInt(1) << k), true};
    if (sm == slo) {
      c = mid;
    }
  }
  RootInterval out{Rational(c, BigInt(1) << k), Rational(c + 1, BigInt(1) << k), false};
  out.lo.canonicalize();
  out.hi.canonicalize();
  return out;
}

namespace detail {

/// P with real coefficients, for repeated evaluation.
struct RealBivar {
  std::vector<std::vector<Real>> a;
  explicit RealBivar(const BivarPoly& P) {
    for (const auto& c : P.coefficients()) {
      std::vector<Real> v;
      for (const auto& z : c.coefficients()) v.push_back(to_real(z));
      a.push_back(std::move(v));
    }
  }
  Real operator()(const Real& x, const Real& z) const {
    Real r = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
      Real ak = 0;
      for (std::size_t i = a[k].size(); i-- > 0;) ak = ak * x + a[k][i];
      r = r * z + ak;
    }
    return r;
  }
};

}  // namespace detail

struct Singularity {
  Real rho;
  Real z;  // branch value at rho (a double root of P(rho, .))
  RootInterval interval;
  int candidates_checked = 0;
};

/// The branch with Y(0) = c0 followed along [0, 1] by predictor-corrector
/// continuation; returns the first discriminant (or leading-coefficient)
/// root where the branch meets a double root.
inline Singularity dominant_singularity(const BivarPoly& P, const Rational& c0, int digits = 60) {
  // Near the branch point P_Z is only about 10^(-digits/4), which costs
  // that many digits in every Newton step.
  PrecisionScope scope(digits + digits / 2 + 30);
  const BivarPoly PZ = P.derivative_z(), PZZ = PZ.derivative_z(), PX = P.derivative_x();
  const detail::RealBivar p(P), pz(PZ), px(PX);
  if (P.evaluate(Rational(0), c0) != 0 || PZ.evaluate(Rational(0), c0) == 0)
    throw AsymptError("branch at the origin is not simple");

  IntPoly cand_poly = squarefree_part(discriminant_z(P)) * squarefree_part(P.coeff(P.degree()));
  cand_poly = squarefree_part(cand_poly);
  if (cand_poly.valuation() > 0)
    cand_poly = IntPoly(std::vector<BigInt>(cand_poly.coefficients().begin() + cand_poly.valuation(), cand_poly.coefficients().end()));
  std::vector<RootInterval> roots = isolate_unit_roots(cand_poly);
  const unsigned long bits = static_cast<unsigned long>(std::ceil((digits + 10) * 3.33));
  const Real tiny = pow(Real(10), -(digits / 2));

  Real x = 0, y = to_real(c0);
  auto newton = [&](const Real& at, Real z, int iters) -> std::optional<Real> {
    for (int it = 0; it < iters; ++it) {
      const Real d = pz(at, z);
      if (d == 0) return std::nullopt;
      const Real step = p(at, z) / d;
      z -= step;
      if (abs(step) <= abs(z) * pow(Real(10), -(digits + 5)) + pow(Real(10), -(digits + 5))) return z;
    }
    return std::nullopt;
  };
  // Moves (x, y) along the branch to target, shrinking steps near trouble.
  auto track = [&](const Real& target) {
    Real h = (target - x) / 32;
    while (x < target) {
      if (x + h > target) h = target - x;
      if (h < pow(Real(10), -(digits + 10))) throw AsymptError("branch tracking stalled");
      const Real slope = -px(x, y) / pz(x, y);
      const Real xn = x + h;
      const Real pred = y + h * slope;
      auto yn = newton(xn, pred, 30);
      if (yn && abs(*yn - pred) <= Real(0.1) * (abs(pred - y) + tiny)) {
        x = xn;
        y = *yn;
        h *= 2;
      } else {
        h /= 4;
      }
    }
  };

  Singularity s;
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    RootInterval r = refine_root(cand_poly, roots[idx], bits);
    if (idx + 1 < roots.size() && !roots[idx + 1].exact && roots[idx + 1].lo < r.hi)
      throw AsymptError("two candidate singularities within resolution");
    const Real xc = to_real((r.lo + r.hi) / 2);
    ++s.candidates_checked;
    const Real approach = xc * (1 - pow(Real(10), -(digits / 2)));
    track(approach);
    // Is the tracked value next to a double root at xc?
    Real z = y;
    bool found = false;
    for (int it = 0; it < 60; ++it) {
      const Real d = pz(xc, z);
      const Real dd = to_real(BigInt(0)) + detail::RealBivar(PZZ)(xc, z);
      if (dd == 0) break;
      const Real step = d / dd;
      z -= step;
      if (abs(step) <= pow(Real(10), -(digits + 5)) * (1 + abs(z))) {
        found = true;
        break;
      }
    }
    if (found && abs(z - y) < pow(Real(10), -(digits / 8)) &&
        abs(p(xc, z)) <= pow(Real(10), -(digits / 2)) * (1 + abs(z))) {
      s.rho = xc;
      s.z = z;
      s.interval = r;
      return s;
    }
    // Not our branch: continue past xc.
    track(xc + (xc - approach));
  }
  throw AsymptError("no singularity of the branch found in (0, 1]");
}

/// gamma in c_n ~ gamma omega^n n^(-3/2) from the square-root expansion
/// Z = Z(rho) - C sqrt(1 - x/rho), C = sqrt(2 rho P_x / P_ZZ).
inline Real subexp_constant(const BivarPoly& P, const Real& rho, const Real& z) {
  const detail::RealBivar px(P.derivative_x()), pzz(P.derivative_z().derivative_z());
  const Real a = px(rho, z), b = pzz(rho, z);
  if (b == 0) throw AsymptError("degenerate branch point: P_ZZ vanishes");
  const Real c2 = 2 * rho * a / b;
  if (c2 <= 0) throw AsymptError("branch point does not give positive coefficients");
  return sqrt(c2) / (2 * sqrt(boost::math::constants::pi<Real>()));
}

struct Extrapolation {
  Real omega, gamma;
  Real omega_spread, gamma_spread;  // change between the last two extrapolation levels
  Real exponent;                    // fitted from the uncorrected ratios
  bool converged = false;
  bool exponent_ok = false;
};

namespace detail {

/// Polynomial extrapolation to h = 0 of values f at h_i (Neville).
inline std::pair<Real, Real> extrapolate_zero(const std::vector<Real>& h, std::vector<Real> f) {
  const std::size_t n = f.size();
  Real prev = f[0];
  Real last = f[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i)
      f[i] = (h[i + level] * f[i] - h[i] * f[i + 1]) / (h[i + level] - h[i]);
    prev = last;
    last = f[0];
  }
  return {last, abs(last - prev)};
}

}  // namespace detail

/// Growth rate from ratios c_n/c_(n-1) (n/(n-1))^(3/2), and the constant
/// from c_n n^(3/2) / omega^n, both extrapolated in 1/n.
inline Extrapolation extrapolate_constants(const std::vector<BigInt>& c, double exponent = -1.5, int points = 8,
                                           int spacing = 10, int digits = 60) {
  PrecisionScope scope(digits);
  const int N = static_cast<int>(c.size()) - 1;
  if (N < points * spacing + 2) throw AsymptError("too few coefficients for extrapolation");
  const Real e = Real(-exponent);
  std::vector<Real> h, fr;
  for (int t = points - 1; t >= 0; --t) {
    const int n = N - t * spacing;
    if (c[static_cast<std::size_t>(n - 1)] == 0) throw AsymptError("zero coefficient in the extrapolation window");
    Real r = to_real(c[static_cast<std::size_t>(n)]) / to_real(c[static_cast<std::size_t>(n - 1)]);
    r *= pow(Real(n) / Real(n - 1), e);
    h.push_back(Real(1) / n);
    fr.push_back(r);
  }
  Extrapolation out;
  std::tie(out.omega, out.omega_spread) = detail::extrapolate_zero(h, fr);
  std::vector<Real> fg;
  for (int t = points - 1; t >= 0; --t) {
    const int n = N - t * spacing;
    fg.push_back(to_real(c[static_cast<std::size_t>(n)]) * pow(Real(n), e) / pow(out.omega, n));
  }
  std::tie(out.gamma, out.gamma_spread) = detail::extrapolate_zero(h, fg);
  // c_n/c_(n-1) = omega (1 + alpha/n + O(1/n^2)) for c_n ~ omega^n n^alpha.
  std::vector<Real> fa;
  for (int t = points - 1; t >= 0; --t) {
    const int n = N - t * spacing;
    const Real raw = to_real(c[static_cast<std::size_t>(n)]) / to_real(c[static_cast<std::size_t>(n - 1)]);
    fa.push_back(n * (raw / out.omega - 1));
  }
  Real spread;
  std::tie(out.exponent, spread) = detail::extrapolate_zero(h, fa);
  const Real tol = pow(Real(10), -6);
  out.converged = out.omega_spread <= tol * abs(out.omega) && out.gamma_spread <= tol * abs(out.gamma) && out.gamma > 0;
  out.exponent_ok = abs(out.exponent - Real(exponent)) < Real(1e-3);
  return out;
}

struct SingularityReport {
  Real rho, omega, gamma, z_at_rho;
  Real omega_extrap, gamma_extrap;
  double exponent = -1.5;
  Real omega_discrepancy, gamma_discrepancy;  // relative
  bool extrapolation_converged = false;
  bool agrees = false;
};

/// Formula-based constants for the branch through c0, cross-checked against
/// the exact coefficients c (at least a few hundred of them).
inline SingularityReport analyze(const BivarPoly& P, const Rational& c0, const std::vector<BigInt>& c, int digits = 60) {
  SingularityReport rep;
  const Singularity s = dominant_singularity(P, c0, digits);
  PrecisionScope scope(digits + 20);
  rep.rho = s.rho;
  rep.z_at_rho = s.z;
  rep.omega = 1 / s.rho;
  rep.gamma = subexp_constant(P, s.rho, s.z);
  const Extrapolation e = extrapolate_constants(c, rep.exponent, 8, 10, digits + 20);
  rep.omega_extrap = e.omega;
  rep.gamma_extrap = e.gamma;
  rep.omega_discrepancy = abs(e.omega - rep.omega) / rep.omega;
  rep.gamma_discrepancy = abs(e.gamma - rep.gamma) / rep.gamma;
  rep.extrapolation_converged = e.converged && e.exponent_ok;
  rep.agrees = rep.omega_discrepancy < Real(1e-5) && rep.gamma_discrepancy < Real(1e-2);
  return rep;
}

}  // namespace stacklab
