#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"

namespace stacklab {

/// theta_m: m-regular linear stack on [n] to m-reduced zigzag stack on
/// [n - m + 1], shortening every arc by m - 1.
inline Diagram reduce(const Diagram& S, int m) {
  require_regularity(m);
  if (S.n() < m - 1) throw DiagramError("reduce needs at least m-1 vertices");
  if (!is_m_regular_linear(S, m)) throw DiagramError("not an " + std::to_string(m) + "-regular linear stack: " + render(S));
  std::vector<Arc> arcs;
  arcs.reserve(S.size());
  for (const Arc& a : S.arcs()) arcs.push_back({a.i, a.j - m + 1});
  return Diagram(S.n() - (m - 1), std::move(arcs));
}

/// phi_m, the inverse of reduce.
inline Diagram expand(const Diagram& T, int m) {
  require_regularity(m);
  if (!is_m_reduced(T, m)) throw DiagramError("not an " + std::to_string(m) + "-reduced zigzag stack: " + render(T));
  std::vector<Arc> arcs;
  arcs.reserve(T.size());
  for (const Arc& a : T.arcs()) arcs.push_back({a.i, a.j + m - 1});
  return Diagram(T.n() + m - 1, std::move(arcs));
}

}  // namespace stacklab
