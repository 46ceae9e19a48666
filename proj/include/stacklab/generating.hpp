#pragma once

#include <stdexcept>
#include <string>

#include "equations.hpp"
#include "series.hpp"

namespace stacklab {

constexpr int kDefaultSeriesOrder = 64;
constexpr int kMaxSeriesOrder = 512;

namespace detail {

template <class T>
BasicSeries<T> newton_branch(const BivarPoly& P, const T& c0, int N) {
  const BivarPoly PZ = P.derivative_z();
  BasicSeries<T> y = BasicSeries<T>::constant(c0, 0);
  int prec = 0;
  while (prec < N) {
    prec = std::min(2 * prec + 1, N);
    BasicSeries<T> yy(y.coefficients(), prec);
    y = yy - P.evaluate(yy) / PZ.evaluate(yy);
  }
  return y;
}

}  // namespace detail

/// The power-series root Y of P(x, Y) = 0 with Y(0) = c0, through x^N.
/// The residual is checked before returning.
inline Series solve_algebraic(const BivarPoly& P, const Rational& c0, int N) {
  if (N < 0) throw SeriesError("negative truncation order");
  const Rational p0 = P.evaluate(Rational(0), c0);
  const Rational pz0 = P.derivative_z().evaluate(Rational(0), c0);
  if (p0 != 0) throw SeriesError("P(0, c0) is not zero");
  if (pz0 == 0) throw SeriesError("branch at the origin is not simple");
  Series y;
  if (c0.get_den() == 1 && (pz0 == 1 || pz0 == -1)) {
    y = to_rational(detail::newton_branch<BigInt>(P, c0.get_num(), N));
  } else {
    y = detail::newton_branch<Rational>(P, c0, N);
  }
  if (!P.evaluate(y).is_zero()) throw std::logic_error("nonzero residual after Newton iteration");
  return y;
}

/// Integer variant for counting series; fails if a coefficient is not integral.
inline IntSeries solve_counting(const BivarPoly& P, const Rational& c0, int N) {
  IntSeries s = to_integral(solve_algebraic(P, c0, N));
  for (const auto& c : s.coefficients())
    if (c < 0) throw SeriesError("counting series has a negative coefficient");
  return s;
}

inline void check_order(int N) {
  if (N < 0 || N > kMaxSeriesOrder) throw SeriesError("series order out of range: " + std::to_string(N));
}

inline IntSeries series_z(int N = kDefaultSeriesOrder) { return solve_counting(build_eq_Z(), 1, N); }

inline IntSeries series_Zm(int m, int N = kDefaultSeriesOrder) { return solve_counting(build_eq_Zm(m), 1, N); }

/// R_m computed from its own equation and from Z_m; the two must agree.
inline IntSeries series_Rm(int m, int N = kDefaultSeriesOrder) {
  IntSeries direct = solve_counting(build_eq_Rm(m), 1, N);
  IntSeries via(N);
  if (N >= m - 1) {
    IntSeries zm = series_Zm(m, N - (m - 1));
    for (int i = 0; i <= N; ++i)
      via[static_cast<std::size_t>(i)] = i < m - 1 ? BigInt(1) : zm[static_cast<std::size_t>(i - (m - 1))];
  } else {
    via = geometric_block<BigInt>(m - 1, N);
  }
  if (!(via == direct)) throw std::logic_error("R_m routes disagree for m = " + std::to_string(m));
  return direct;
}

/// S = R_2 - 1 from the extended RNA equation.
inline IntSeries series_extended_rna(int N = kDefaultSeriesOrder) {
  return solve_counting(build_eq_extended_rna(), 0, N);
}

/// Large Schroeder numbers from (1 - x - sqrt(1 - 6x + x^2)) / (2x).
inline IntSeries schroeder(int N = kDefaultSeriesOrder) {
  IntSeries q(N + 1);
  q[0] = 1;
  q[1] = -6;
  if (N >= 1) q[2] = 1;
  IntSeries num = IntSeries::constant(1, N + 1) - q.sqrt();
  num[1] -= 1;
  IntSeries out(N);
  for (int i = 0; i <= N; ++i) {
    const BigInt& c = num[static_cast<std::size_t>(i + 1)];
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw std::logic_error("Schroeder series is not integral");
    out[static_cast<std::size_t>(i)] = c / 2;
  }
  return out;
}

}  // namespace stacklab
