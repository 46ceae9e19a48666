#pragma once

// Slow reference implementations written straight from the definitions.
// They share nothing with the library except the Diagram value type.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include <stacklab/diagram.hpp>

namespace oracle {

using stacklab::Arc;
using stacklab::Diagram;

/// Every simple graph on [n] (arcs (i,j), i<j) whose arcs satisfy keep_arc.
inline void all_graphs(int n, const std::function<void(const Diagram&)>& fn,
                       const std::function<bool(int, int)>& keep_arc = {}) {
  std::vector<Arc> pool;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!keep_arc || keep_arc(i, j)) pool.push_back({i, j});
  const unsigned long total = 1UL << pool.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (mask >> b & 1UL) arcs.push_back(pool[b]);
    fn(Diagram(n, arcs));
  }
}

struct Degrees {
  std::vector<int> left, right;
};

inline Degrees degrees(const Diagram& d) {
  Degrees g{std::vector<int>(static_cast<std::size_t>(d.n()) + 2, 0), std::vector<int>(static_cast<std::size_t>(d.n()) + 2, 0)};
  for (const Arc& a : d.arcs()) {
    ++g.right[static_cast<std::size_t>(a.i)];
    ++g.left[static_cast<std::size_t>(a.j)];
  }
  return g;
}

inline bool noncrossing(const Diagram& d) {
  for (const Arc& a : d.arcs())
    for (const Arc& b : d.arcs())
      if (a.i < b.i && b.i < a.j && a.j < b.j) return false;
  return true;
}

inline bool nonnesting(const Diagram& d) {
  for (const Arc& a : d.arcs())
    for (const Arc& b : d.arcs())
      if (a.i < b.i && b.j < a.j) return false;
  return true;
}

inline bool zigzag(const Diagram& d) {
  if (!noncrossing(d)) return false;
  const Degrees g = degrees(d);
  for (int v = 1; v <= d.n(); ++v) {
    const int l = g.left[static_cast<std::size_t>(v)], r = g.right[static_cast<std::size_t>(v)];
    if (l + r > 2) return false;
    if (l + r == 2 && l == 1) return false;
  }
  return true;
}

inline bool regular_linear(const Diagram& d, int m) {
  if (!noncrossing(d)) return false;
  const Degrees g = degrees(d);
  for (int v = 1; v <= d.n(); ++v)
    if (g.left[static_cast<std::size_t>(v)] + g.right[static_cast<std::size_t>(v)] > 2) return false;
  return std::all_of(d.arcs().begin(), d.arcs().end(), [m](const Arc& a) { return a.j - a.i >= m; });
}

inline bool reduced(const Diagram& d, int m) {
  if (!zigzag(d)) return false;
  const Degrees g = degrees(d);
  const int n = d.n();
  for (int i = 1; i + m - 1 <= n; ++i)
    if (g.left[static_cast<std::size_t>(i)] + g.right[static_cast<std::size_t>(i + m - 1)] > 2) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.left[static_cast<std::size_t>(i)] > 0 && g.right[static_cast<std::size_t>(j)] > 0 && j - i < m - 1)
        return false;
  return true;
}

/// Connected as a graph on all n vertices (n <= 1 counts as connected).
inline bool connected(const Diagram& d) {
  const int n = d.n();
  if (n <= 1) return true;
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> todo{1};
  seen[1] = 1;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (const Arc& a : d.arcs()) {
      int w = a.i == v ? a.j : a.j == v ? a.i : 0;
      if (w && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        todo.push_back(w);
      }
    }
  }
  return std::count(seen.begin() + 1, seen.end(), 1) == n;
}

inline bool rna(const Diagram& d) {
  if (!noncrossing(d)) return false;
  const Degrees g = degrees(d);
  for (int v = 1; v <= d.n(); ++v)
    if (g.left[static_cast<std::size_t>(v)] + g.right[static_cast<std::size_t>(v)] > 1) return false;
  return std::all_of(d.arcs().begin(), d.arcs().end(), [](const Arc& a) { return a.j - a.i >= 2; });
}

/// Collects the graphs on [n] passing pred, sorted.
inline std::vector<Diagram> collect(int n, const std::function<bool(const Diagram&)>& pred,
                                    const std::function<bool(int, int)>& keep_arc = {}) {
  std::vector<Diagram> out;
  all_graphs(n, [&](const Diagram& d) {
    if (pred(d)) out.push_back(d);
  }, keep_arc);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
