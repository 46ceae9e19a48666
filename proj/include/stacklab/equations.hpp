#pragma once

#include <stdexcept>
#include <vector>

#include "bivariate.hpp"

// The printed algebraic equations, entered once.

namespace stacklab {

namespace eqn {

inline IntPoly X(unsigned k = 1) { return IntPoly::monomial(BigInt(1), k); }
inline IntPoly C(long c) { return IntPoly(BigInt(c)); }

inline void require_m(int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
}

}  // namespace eqn

/// x^2 (x - 1) Z^3 + 2x Z^2 - (x + 1) Z + 1 = 0, zigzag stacks.
inline BivarPoly build_eq_Z() {
  using namespace eqn;
  return BivarPoly({C(1), -(X() + C(1)), C(2) * X(), X(2) * (X() - C(1))});
}

/// The quintic a_5 Z^5 + ... + a_0 = 0 satisfied by Z_m.
inline BivarPoly build_eq_Zm(int m) {
  using namespace eqn;
  require_m(m);
  const unsigned M = static_cast<unsigned>(m);
  IntPoly a0 = (X() - C(1)) * (X(M) - C(2) * X() + C(1)).pow(2);
  IntPoly a1 = C(-2) * X(3 * M + 1) + X(3 * M) + C(12) * X(2 * M + 2) - C(16) * X(2 * M + 1) + C(7) * X(2 * M) -
               C(18) * X(M + 3) + C(36) * X(M + 2) - C(28) * X(M + 1) + C(7) * X(M) + C(4) * X(4) - C(10) * X(3) +
               C(12) * X(2) - C(6) * X() + C(1);
  IntPoly a2 = X(M) * (C(2) * X(3 * M + 1) - C(15) * X(2 * M + 2) + C(14) * X(2 * M + 1) - C(5) * X(2 * M) +
                       C(33) * X(M + 3) - C(60) * X(M + 2) + C(47) * X(M + 1) - C(14) * X(M) - C(16) * X(4) +
                       C(39) * X(3) - C(45) * X(2) + C(25) * X() - C(5));
  IntPoly a3 = X(2 * M) * (X() - C(1)) *
               (C(7) * X(2 * M + 1) - C(28) * X(M + 2) + C(22) * X(M + 1) - C(8) * X(M) + C(24) * X(3) -
                C(36) * X(2) + C(27) * X() - C(8));
  IntPoly a4 = X(3 * M) * (X() - C(1)).pow(2) * (C(9) * X(M + 1) - C(16) * X(2) + C(11) * X() - C(4));
  IntPoly a5 = C(4) * X(4 * M + 1) * (X() - C(1)).pow(3);
  return BivarPoly({a0, a1, a2, a3, a4, a5});
}

/// The quintic c_5 R^5 + ... + c_0 = 0 satisfied by R_m.
inline BivarPoly build_eq_Rm(int m) {
  using namespace eqn;
  require_m(m);
  const unsigned M = static_cast<unsigned>(m);
  const IntPoly xm1 = X(M) - C(1);
  const IntPoly x1 = X() - C(1);
  IntPoly c0 = x1 * xm1.pow(3);
  IntPoly c1 = xm1.pow(2) * (X(2 * M + 1) - C(2) * X(M + 2) - X(M + 1) + X(M) - C(3) * X(3) + C(8) * X(2) -
                             C(3) * X() - C(1));
  IntPoly c2 = C(-1) * X() * x1 * xm1 *
               (C(5) * X(2 * M + 1) - C(6) * X(M + 2) - C(9) * X(M + 1) + C(5) * X(M) - C(3) * X(3) +
                C(12) * X(2) + X() - C(5));
  IntPoly c3 = X(2) * x1.pow(2) * xm1 * (C(11) * X(M + 1) - C(8) * X(2) - C(11) * X() + C(8));
  IntPoly c4 = X(3) * x1.pow(3) * (C(-11) * X(M + 1) + C(4) * X(2) + C(11) * X() - C(4));
  IntPoly c5 = C(4) * X(5) * x1.pow(4);
  return BivarPoly({c0, c1, c2, c3, c4, c5});
}

/// RHS(S) - S for the extended RNA equation in S = R_2 - 1 (so S(0) = 0).
inline BivarPoly build_eq_extended_rna() {
  using namespace eqn;
  IntPoly s0 = X() - C(2) * X(2) + X(3);
  IntPoly s1 = C(3) * X() - C(7) * X(2) + C(7) * X(3) - C(2) * X(4) - C(1);
  IntPoly s2 = C(5) * X() - C(10) * X(2) + C(14) * X(3) - C(9) * X(4) + C(2) * X(5);
  IntPoly s3 = C(-8) * X(2) + C(11) * X(3) - C(14) * X(4) + C(7) * X(5);
  IntPoly s4 = C(4) * X(3) - C(7) * X(4) + C(9) * X(5);
  IntPoly s5 = C(4) * X(5);
  return BivarPoly({s0, s1, s2, s3, s4, s5});
}

/// The linear substitution relating the two quintics: R = B_m + x^(m-1) Z,
/// with B_m = 1 + x + ... + x^(m-2).
inline BivarPoly rm_from_zm_equation(int m) {
  using namespace eqn;
  require_m(m);
  IntPoly block;
  for (int i = 0; i <= m - 2; ++i) block += X(static_cast<unsigned>(i));
  // Z = (R - B_m) / x^(m-1): P_Z(x, (-B_m + R) / x^(m-1)) * x^(5(m-1)).
  return build_eq_Zm(m).substitute_linear(-block, C(1), X(static_cast<unsigned>(m - 1)));
}

}  // namespace stacklab
