#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace stacklab {

/// A run of vertices lo..hi (empty when lo > hi) sitting after the
/// component vertex u and, unless right-open, before the component vertex v.
struct Interval {
  int u = 0, v = 0;
  int lo = 1, hi = 0;
  bool right_open = false;
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
};

struct Decomposition {
  Diagram S;
  std::vector<int> vertices;         // component vertices, increasing
  Diagram component;                 // component arcs, original labels
  std::vector<Interval> intervals;   // one per component vertex; the last may be empty
  std::vector<Interval> public_intervals() const {
    std::vector<Interval> out = intervals;
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }
  /// J_t = {u_t, ..., v_t}; the last one runs to n.
  std::vector<std::pair<int, int>> jsets() const {
    std::vector<std::pair<int, int>> out;
    for (const Interval& iv : intervals) out.emplace_back(iv.u, iv.right_open ? S.n() : iv.v);
    return out;
  }
  Diagram substructure(const Interval& iv) const { return window(S, iv.lo, iv.hi); }
};

/// Primary component of a zigzag stack and the intervals it cuts out.
inline Decomposition primary_component(const Diagram& S) {
  if (!is_zigzag(S)) throw DiagramError("primary_component needs a zigzag stack: " + render(S));
  Decomposition dec;
  dec.S = S;
  if (S.n() == 0) return dec;
  auto lab = component_labels(S);
  for (int v = 1; v <= S.n(); ++v)
    if (lab[static_cast<std::size_t>(v)] == 1) dec.vertices.push_back(v);
  std::vector<Arc> carcs;
  for (const Arc& a : S.arcs())
    if (lab[static_cast<std::size_t>(a.i)] == 1) carcs.push_back(a);
  dec.component = Diagram(S.n(), std::move(carcs));
  for (std::size_t t = 0; t < dec.vertices.size(); ++t) {
    Interval iv;
    iv.u = dec.vertices[t];
    iv.lo = iv.u + 1;
    if (t + 1 < dec.vertices.size()) {
      iv.v = dec.vertices[t + 1];
      iv.hi = iv.v - 1;
    } else {
      iv.v = S.n() + 1;
      iv.hi = S.n();
      iv.right_open = true;
    }
    dec.intervals.push_back(iv);
  }
  // No arc may join two intervals, and nothing is lost.
  std::size_t inside = 0;
  for (const Arc& a : S.arcs()) {
    if (lab[static_cast<std::size_t>(a.i)] == 1) continue;
    bool ok = false;
    for (const Interval& iv : dec.intervals)
      if (a.i >= iv.lo && a.j <= iv.hi) ok = true;
    if (!ok) throw std::logic_error("arc crosses interval boundary in " + render(S));
    ++inside;
  }
  if (inside + dec.component.size() != S.size()) throw std::logic_error("decomposition lost arcs");
  return dec;
}

/// Interval type: the boundary pair up to reflection, with markers for the
/// reflected (primed) and right-open (starred) readings.
struct TypeTag {
  int type = 1;
  bool primed = false;
  bool starred = false;
  std::string to_string() const {
    return "T" + std::to_string(type) + (primed ? "'" : "") + (starred ? "*" : "");
  }
  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

inline TypeTag tag_for_pair(int left, int right) {
  const int a = std::max(left, right), b = std::min(left, right);
  TypeTag t;
  if (a == 0) t.type = 1;
  else if (a == 1 && b == 0) t.type = 2;
  else if (a == 1 && b == 1) t.type = 3;
  else if (a == 2 && b == 0) t.type = 4;
  else if (a == 2 && b == 1) t.type = 5;
  else if (a == 2 && b == 2) t.type = 6;
  else throw DiagramError("boundary degree out of range");
  t.primed = left < right;
  return t;
}

/// Boundary pair (ld(u), rd(v)) for every interval, right-open ones using
/// rd = 0, and the resulting type tags.
inline std::vector<TypeTag> classify_intervals(const Decomposition& dec, int m) {
  require_regularity(m);
  if (dec.component.empty()) throw DiagramError("classify_intervals needs deg(1) >= 1");
  DegreeProfile p(dec.S);
  std::vector<TypeTag> out;
  for (const Interval& iv : dec.intervals) {
    const int left = p.ld[static_cast<std::size_t>(iv.u)];
    const int right = iv.right_open ? 0 : p.rd[static_cast<std::size_t>(iv.v)];
    TypeTag t = tag_for_pair(left, right);
    t.starred = iv.right_open;
    out.push_back(t);
  }
  return out;
}

inline std::vector<std::string> tag_strings(const std::vector<TypeTag>& tags) {
  std::vector<std::string> out;
  for (const auto& t : tags) out.push_back(t.to_string());
  return out;
}

/// Conditions (1) and (2) checked only on pairs inside a common J_t.
inline bool verify_localization(const Diagram& S, int m) {
  require_regularity(m);
  Decomposition dec = primary_component(S);
  DegreeProfile p(S);
  for (auto [lo, hi] : dec.jsets()) {
    for (int i = lo; i + m - 1 <= hi; ++i)
      if (p.ld[static_cast<std::size_t>(i)] + p.rd[static_cast<std::size_t>(i + m - 1)] > 2) return false;
    for (int i = lo; i <= hi; ++i) {
      if (p.ld[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = i + 1; j <= hi && j - i < m - 1; ++j)
        if (p.rd[static_cast<std::size_t>(j)] > 0) return false;
    }
  }
  return true;
}

}  // namespace stacklab
