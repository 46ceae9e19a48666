#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "generating.hpp"

// Generating functions of the interval substructures T_1..T_6 and of the
// endpoint-restricted classes G and H, all driven by Z_m.

namespace stacklab {

/// Which reading of two displays to use: the sign of the linear term in the
/// H equation (1 - x versus the printed 1 + x), and the power of (1 - x T_4)
/// in the last term of the master identity (squared versus printed single).
struct Reading {
  bool h_minus_x = true;
  bool squared_last_term = true;
  static Reading as_printed() { return {false, false}; }
  static Reading corrected() { return {true, true}; }
  std::string describe() const {
    return std::string(h_minus_x ? "H with 1-x" : "H with 1+x") +
           (squared_last_term ? ", squared last denominator" : ", single last denominator");
  }
};

struct Substructures {
  int m = 2;
  IntSeries Z;
  std::array<IntSeries, 7> T;  // T[1]..T[6]; T[0] unused
  IntSeries G, H;
  IntSeries D;  // 1 / (1 - x T_4)
};

namespace detail {

inline IntSeries poly_series(const IntPoly& p, int N) { return IntSeries::from_polynomial(p, N); }

}  // namespace detail

/// Builds every substructure series from Z_m through order N.
inline Substructures substructures(int m, int N, Reading reading = Reading::corrected()) {
  eqn::require_m(m);
  Substructures s;
  s.m = m;
  s.Z = series_Zm(m, N);
  const IntSeries& Z = s.Z;
  const IntSeries one = IntSeries::constant(1, N);
  auto blk = [N](int k) { return geometric_block<BigInt>(k, N); };

  IntSeries T4 = blk(m - 1) + Z.shifted(m - 1);
  IntSeries D = (one - T4.shifted(1)).inverse();
  // T_2 and G are coupled linearly: T_2 = A + x^(m-2) G, G = 1 + xZ + x^2 Z T_2 D.
  IntSeries T2 = (blk(m - 2) + (one + Z.shifted(1)).shifted(m - 2)) / (one - (Z * D).shifted(m));
  IntSeries G = one + Z.shifted(1) + (Z * T2 * D).shifted(2);
  IntSeries T5 = blk(m - 2).shifted(m - 1) + G.shifted(2 * m - 3);
  IntSeries T6 = blk(m - 1).shifted(m - 1) + Z.shifted(2 * m - 2);
  const IntSeries Z2 = Z * Z;
  IntSeries B = one + G.shifted(1) * BigInt(2) + (Z2 * T2 * T5 * D).shifted(5) * BigInt(2) +
                (Z2 * T2 * T2 * T6 * D * D).shifted(6);
  B = reading.h_minus_x ? B - one.shifted(1) : B + one.shifted(1);
  // T_3 and H are coupled the same way through x^(2m-4) and x^4 Z^2.
  IntSeries T3 = (blk(m - 2).shifted(m - 2) + B.shifted(2 * m - 4)) / (one - Z2.shifted(2 * m));
  IntSeries H = B + (Z2 * T3).shifted(4);

  s.T[1] = Z;
  s.T[2] = T2;
  s.T[3] = T3;
  s.T[4] = T4;
  s.T[5] = T5;
  s.T[6] = T6;
  s.G = G;
  s.H = H;
  s.D = D;
  return s;
}

inline IntSeries series_T(int m, int i, int N, Reading reading = Reading::corrected()) {
  if (i < 1 || i > 6) throw std::invalid_argument("type index must be in 1..6");
  return substructures(m, N, reading).T[static_cast<std::size_t>(i)];
}
inline IntSeries series_G(int m, int N) { return substructures(m, N).G; }
inline IntSeries series_H(int m, int N, Reading reading = Reading::corrected()) {
  return substructures(m, N, reading).H;
}

/// (1 - x) Z_m minus the decomposition sum over T_1..T_6; zero when the
/// identity holds through the truncation order.
inline IntSeries master_identity_residual(const Substructures& s, Reading reading = Reading::corrected()) {
  const int N = s.Z.order();
  const IntSeries one = IntSeries::constant(1, N);
  const auto& T = s.T;
  const IntSeries& D = s.D;
  IntSeries rhs = one + (T[1] * T[2] * D).shifted(2) + (T[1] * T[2] * T[2] * D).shifted(3) +
                  (T[1] * T[1] * T[3] * T[4]).shifted(4) + (T[1] * T[1] * T[2] * T[4] * T[5] * D).shifted(5) * BigInt(2);
  IntSeries last = (T[1] * T[1] * T[2] * T[2] * T[4] * T[6] * D).shifted(6);
  if (reading.squared_last_term) last = last * D;
  return s.Z - s.Z.shifted(1) - (rhs + last);
}

/// T_2, T_3 and T_5 written directly in terms of Z_m.
struct ClosedForms {
  IntSeries T2, T3, T5;
};

inline ClosedForms closed_form_substructures(int m, const IntSeries& Z) {
  using namespace eqn;
  eqn::require_m(m);
  const int N = Z.order();
  const unsigned M = static_cast<unsigned>(m);
  const IntPoly x1 = X() - C(1);
  const IntPoly q = X(M) - C(2) * X() + C(1);
  const IntSeries one = IntSeries::constant(1, N);
  auto ps = [N](const IntPoly& p) { return detail::poly_series(p, N); };

  // (1 - x^(m-1) + x^(m-1)(1-x) Z)(1 - 2x + x^m - x^m (1-x) Z)
  BivarPoly num2 = BivarPoly({C(1) - X(M - 1), X(M - 1) * (C(1) - X())}) * BivarPoly({q, C(-1) * X(M) * (C(1) - X())});
  BivarPoly den2 = BivarPoly({q, C(-2) * X(M) * (C(1) - X())});
  IntSeries inv1mx = (one - one.shifted(1)).inverse();
  IntSeries frac = num2.evaluate(Z) / den2.evaluate(Z) * inv1mx;

  BivarPoly num3({(C(1) - X(M)) * q.pow(2),
                  X(M) * q * (X(2 * M) - C(6) * X(M + 1) + C(4) * X(M) + C(2) * X(2) + C(2) * X() - C(3)),
                  X(2 * M) * x1 * (C(3) * X(2 * M) - C(13) * X(M + 1) + C(7) * X(M) + C(9) * X(2) - C(5) * X() - C(1)),
                  C(3) * X(3 * M) * x1.pow(2) * q, X(4 * M) * x1.pow(3)});
  IntSeries den3 = (one - Z.shifted(m)) * den2.evaluate(Z) * den2.evaluate(Z);
  IntSeries t3 = (ps(X(M - 2)) * num3.evaluate(Z)) / den3 * inv1mx;

  return ClosedForms{frac, t3, frac.shifted(m - 1)};
}

}  // namespace stacklab
