#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace stacklab {

class WalkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-avoiding walk on the square lattice, starting at the origin.
class LatticeWalk {
 public:
  explicit LatticeWalk(std::string moves) : moves_(std::move(moves)) {
    std::pair<int, int> p{0, 0};
    points_.push_back(p);
    std::set<std::pair<int, int>> seen{p};
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      switch (moves_[k]) {
        case 'U': ++p.second; break;
        case 'D': --p.second; break;
        case 'L': --p.first; break;
        case 'R': ++p.first; break;
        default: throw WalkError("bad move '" + std::string(1, moves_[k]) + "' at position " + std::to_string(k + 1));
      }
      if (!seen.insert(p).second) throw WalkError("walk revisits a site at step " + std::to_string(k + 1));
      points_.push_back(p);
    }
  }
  const std::string& moves() const { return moves_; }
  int size() const { return static_cast<int>(points_.size()); }
  /// Grid position of vertex v (1-based).
  std::pair<int, int> at(int v) const { return points_.at(static_cast<std::size_t>(v - 1)); }

 private:
  std::string moves_;
  std::vector<std::pair<int, int>> points_;
};

/// Arcs (i, j), j - i >= 2, between vertices on adjacent lattice sites.
inline Diagram contacts(const LatticeWalk& w) {
  std::map<std::pair<int, int>, int> where;
  for (int v = 1; v <= w.size(); ++v) where[w.at(v)] = v;
  std::vector<Arc> arcs;
  const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
  for (int v = 1; v <= w.size(); ++v) {
    auto [x, y] = w.at(v);
    for (int d = 0; d < 4; ++d) {
      auto it = where.find({x + dx[d], y + dy[d]});
      if (it != where.end() && it->second >= v + 2) arcs.push_back({v, it->second});
    }
  }
  return Diagram(w.size(), std::move(arcs));
}

using ArcSet = std::vector<Arc>;

namespace detail {

inline void require_partition(const Diagram& d, const std::vector<ArcSet>& parts) {
  std::vector<Arc> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (all != d.arcs()) throw DiagramError("parts do not partition the arcs of " + render(d));
}

}  // namespace detail

/// Parts are read in order as stack, stack, queue; missing trailing parts
/// are empty.
inline bool verify_decomposition(const Diagram& d, const std::vector<ArcSet>& parts) {
  detail::require_partition(d, parts);
  if (parts.size() > 3) return false;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Diagram sub(d.n(), parts[k]);
    if (!(k < 2 ? is_stack(sub) : is_queue(sub))) return false;
  }
  return true;
}

/// Backtracking search for a split into stack, stack, queue, longest arcs
/// first, under a node budget. Returns the three parts (possibly empty).
inline std::optional<std::vector<ArcSet>> decompose_heuristic(const Diagram& d, long budget = 1000000) {
  std::vector<Arc> order = d.arcs();
  std::stable_sort(order.begin(), order.end(), [](const Arc& a, const Arc& b) { return a.length() > b.length(); });
  std::vector<ArcSet> parts(3);
  long nodes = 0;
  auto fits = [&](int part, const Arc& a) {
    for (const Arc& b : parts[static_cast<std::size_t>(part)])
      if (part < 2 ? arcs_cross(a, b) : arcs_nest(a, b)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    if (++nodes > budget) return false;
    for (int part = 0; part < 3; ++part) {
      // The two stacks are interchangeable while the second is empty.
      if (part == 1 && parts[1].empty() && parts[0].empty()) continue;
      if (!fits(part, order[k])) continue;
      parts[static_cast<std::size_t>(part)].push_back(order[k]);
      if (self(self, k + 1)) return true;
      parts[static_cast<std::size_t>(part)].pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

}  // namespace stacklab
