#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "diagram.hpp"
#include "limits.hpp"

namespace stacklab {

using Count = mpz_class;

/// What a generated diagram must satisfy. Everything except the leaf
/// filters (connected, no_isolated) is enforced while arcs are placed.
struct Constraints {
  enum class Shape { Noncrossing, Nonnesting };
  Shape shape = Shape::Noncrossing;
  int max_degree = -1;  // -1: unbounded
  int min_length = 1;
  bool zigzag = false;
  int reduced_m = 0;  // 0: no m-reduced conditions
  int ld_left = 0, rd_right = 0;
  int first_max_degree = -1, last_max_degree = -1;
  bool connected = false;
  bool no_isolated = false;
};

enum class ClassKind {
  Stack,
  Queue,
  Zigzag,
  ConnectedZigzag,
  MRegularLinear,
  MReducedZigzag,
  RnaSecondary,
  TypeT,
  TypeG,
  TypeH
};

/// Boundary degree pairs (ld of the left end, rd of the right end) for T1..T6.
constexpr int kTypeBoundary[7][2] = {{0, 0}, {0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};

struct DiagramClass {
  ClassKind kind = ClassKind::Zigzag;
  std::optional<int> m;
  int type = 0;  // 1..6 for TypeT

  static DiagramClass stack() { return {ClassKind::Stack, {}, 0}; }
  static DiagramClass queue() { return {ClassKind::Queue, {}, 0}; }
  static DiagramClass zigzag() { return {ClassKind::Zigzag, {}, 0}; }
  static DiagramClass connected_zigzag() { return {ClassKind::ConnectedZigzag, {}, 0}; }
  static DiagramClass regular_linear(int m) { return {ClassKind::MRegularLinear, m, 0}; }
  static DiagramClass reduced_zigzag(int m) { return {ClassKind::MReducedZigzag, m, 0}; }
  static DiagramClass rna_secondary() { return {ClassKind::RnaSecondary, {}, 0}; }
  static DiagramClass type_t(int m, int i) { return {ClassKind::TypeT, m, i}; }
  static DiagramClass type_g(int m) { return {ClassKind::TypeG, m, 0}; }
  static DiagramClass type_h(int m) { return {ClassKind::TypeH, m, 0}; }

  bool needs_m() const {
    switch (kind) {
      case ClassKind::MRegularLinear:
      case ClassKind::MReducedZigzag:
      case ClassKind::TypeT:
      case ClassKind::TypeG:
      case ClassKind::TypeH:
        return true;
      default:
        return false;
    }
  }

  void validate() const {
    if (needs_m() && !m) throw std::invalid_argument("class " + name() + " needs m");
    if (!needs_m() && m) throw std::invalid_argument("class " + name() + " takes no m");
    if (m && *m < 2) throw std::invalid_argument("m must be at least 2");
    if (kind == ClassKind::TypeT && (type < 1 || type > 6)) throw std::invalid_argument("type index must be in 1..6");
  }

  std::string name() const {
    switch (kind) {
      case ClassKind::Stack: return "stack";
      case ClassKind::Queue: return "queue";
      case ClassKind::Zigzag: return "zigzag";
      case ClassKind::ConnectedZigzag: return "connected-zigzag";
      case ClassKind::MRegularLinear: return "regular-linear";
      case ClassKind::MReducedZigzag: return "reduced-zigzag";
      case ClassKind::RnaSecondary: return "rna";
      case ClassKind::TypeT: return "type-t" + std::to_string(type);
      case ClassKind::TypeG: return "type-g";
      case ClassKind::TypeH: return "type-h";
    }
    return "?";
  }

  Constraints constraints() const {
    validate();
    Constraints c;
    switch (kind) {
      case ClassKind::Stack:
        break;
      case ClassKind::Queue:
        c.shape = Constraints::Shape::Nonnesting;
        break;
      case ClassKind::ConnectedZigzag:
        c.connected = true;
        [[fallthrough]];
      case ClassKind::Zigzag:
        c.max_degree = 2;
        c.zigzag = true;
        break;
      case ClassKind::MRegularLinear:
        c.max_degree = 2;
        c.min_length = *m;
        break;
      case ClassKind::RnaSecondary:
        c.max_degree = 1;
        c.min_length = 2;
        break;
      case ClassKind::TypeH:
        c.last_max_degree = 1;
        [[fallthrough]];
      case ClassKind::TypeG:
        c.first_max_degree = 1;
        [[fallthrough]];
      case ClassKind::MReducedZigzag:
      case ClassKind::TypeT:
        c.max_degree = 2;
        c.zigzag = true;
        c.reduced_m = *m;
        if (kind == ClassKind::TypeT) {
          c.ld_left = kTypeBoundary[type][0];
          c.rd_right = kTypeBoundary[type][1];
        }
        break;
    }
    return c;
  }
};

/// Parses names such as "zigzag", "regular-linear", "type-t3".
inline DiagramClass parse_class(const std::string& name, std::optional<int> m, std::optional<int> type = {}) {
  DiagramClass c;
  if (name == "stack") c = DiagramClass::stack();
  else if (name == "queue") c = DiagramClass::queue();
  else if (name == "zigzag") c = DiagramClass::zigzag();
  else if (name == "connected-zigzag") c = DiagramClass::connected_zigzag();
  else if (name == "regular-linear" || name == "linear") c = {ClassKind::MRegularLinear, m, 0};
  else if (name == "reduced-zigzag" || name == "reduced") c = {ClassKind::MReducedZigzag, m, 0};
  else if (name == "rna") c = DiagramClass::rna_secondary();
  else if (name == "type-g") c = {ClassKind::TypeG, m, 0};
  else if (name == "type-h") c = {ClassKind::TypeH, m, 0};
  else if (name.rfind("type-t", 0) == 0 && name.size() == 7 && name[6] >= '1' && name[6] <= '6')
    c = {ClassKind::TypeT, m, name[6] - '0'};
  else if (name == "type-t" && type) c = {ClassKind::TypeT, m, *type};
  else throw std::invalid_argument("unknown class '" + name + "'");
  c.m = m;
  c.validate();
  return c;
}

namespace detail {

/// Vertex-by-vertex backtracking. At vertex j a set of left partners is
/// chosen among the earlier vertices that can still take a right arc.
/// For noncrossing shapes the candidates are the vertices not strictly
/// covered by an arc; choosing partners with minimum p covers (p, j).
class Engine {
 public:
  using Leaf = std::function<void(const Engine&)>;

  Engine(int n, const Constraints& c) : n_(n), c_(c) {
    const auto sz = static_cast<std::size_t>(n) + 2;
    ld_.assign(sz, 0);
    rd_.assign(sz, 0);
    cap_.assign(sz, c.max_degree < 0 ? n + 1 : c.max_degree);
    if (n >= 1 && c.first_max_degree >= 0) cap_[1] = std::min(cap_[1], c.first_max_degree);
    if (n >= 1 && c.last_max_degree >= 0) cap_[static_cast<std::size_t>(n)] = std::min(cap_[static_cast<std::size_t>(n)], c.last_max_degree);
    visible_.assign(sz, 0);
    cand_.assign(sz, std::vector<int>());
  }

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Diagram diagram() const { return Diagram(n_, arcs_); }

  /// False when the boundary alone already violates the reduced conditions.
  bool boundary_ok() const {
    const int m = c_.reduced_m;
    if (m == 0) return true;
    if (m - 1 == n_ + 1 && c_.ld_left + c_.rd_right > 2) return false;
    if (c_.ld_left > 0 && c_.rd_right > 0 && n_ + 1 < m - 1) return false;
    return true;
  }

  void run(const Leaf& leaf, int stop_at = -1) {
    leaf_ = &leaf;
    stop_at_ = stop_at;
    if (boundary_ok()) vertex(1);
  }

  /// Continues a copy taken at a stop vertex.
  void resume(const Leaf& leaf) {
    leaf_ = &leaf;
    stop_at_ = -1;
    vertex(start_);
  }

 private:
  int ldv(int p) const { return p == 0 ? c_.ld_left : ld_[static_cast<std::size_t>(p)]; }

  bool alive(int v) const {
    const auto s = static_cast<std::size_t>(v);
    if (c_.zigzag && ld_[s] > 0) return false;
    return ld_[s] + rd_[s] < cap_[s];
  }

  /// Conditions touched by rd(i) growing by one.
  bool right_step_ok(int i) const {
    const int m = c_.reduced_m;
    if (m == 0) return true;
    const int p = i - m + 1;
    if (p >= 0 && ldv(p) + rd_[static_cast<std::size_t>(i)] + 1 > 2) return false;
    if (rd_[static_cast<std::size_t>(i)] == 0)
      for (int q = std::max(0, i - m + 2); q < i; ++q)
        if (ldv(q) > 0) return false;
    return true;
  }

  /// Conditions touched by fixing ld(j) = cnt against the right boundary.
  bool left_final_ok(int j, int cnt) const {
    const int m = c_.reduced_m;
    if (m == 0 || cnt == 0) return true;
    if (j + m - 1 == n_ + 1 && cnt + c_.rd_right > 2) return false;
    if (c_.rd_right > 0 && n_ + 1 - j < m - 1) return false;
    return true;
  }

  void vertex(int j) {
    if (j > n_) {
      leaf();
      return;
    }
    if (j == stop_at_) {
      start_ = j;
      (*leaf_)(*this);
      return;
    }
    auto& cand = cand_[static_cast<std::size_t>(j)];
    cand.clear();
    const int last = j - c_.min_length;
    if (c_.shape == Constraints::Shape::Noncrossing) {
      for (int k = 0; k < vis_size_; ++k) {
        const int v = visible_[static_cast<std::size_t>(k)];
        if (v > last) break;
        if (alive(v)) cand.push_back(k);
      }
    } else {
      for (int v = std::max(1, lo_); v <= last; ++v)
        if (alive(v)) cand.push_back(v);
    }
    choose(j, 0, 0, n_ + 1, 0);
  }

  int vertex_of(int candidate) const {
    return c_.shape == Constraints::Shape::Noncrossing ? visible_[static_cast<std::size_t>(candidate)] : candidate;
  }

  // min_pos is a stack index (noncrossing) or a vertex (nonnesting).
  void choose(int j, std::size_t idx, int cnt, int min_pos, int max_v) {
    const auto& cand = cand_[static_cast<std::size_t>(j)];
    if (idx == cand.size()) {
      finish(j, cnt, min_pos, max_v);
      return;
    }
    choose(j, idx + 1, cnt, min_pos, max_v);
    if (cnt >= cap_[static_cast<std::size_t>(j)]) return;
    const int k = cand[idx];
    const int i = vertex_of(k);
    if (!right_step_ok(i)) return;
    ++rd_[static_cast<std::size_t>(i)];
    arcs_.push_back({i, j});
    choose(j, idx + 1, cnt + 1, std::min(min_pos, k), std::max(max_v, i));
    arcs_.pop_back();
    --rd_[static_cast<std::size_t>(i)];
  }

  struct Saved {
    int vis_size, vis_top, lo;
  };

  Saved advance(int j, int cnt, int min_pos, int max_v) {
    Saved s{vis_size_, 0, lo_};
    if (c_.shape == Constraints::Shape::Noncrossing) {
      if (cnt > 0) vis_size_ = min_pos + 1;
      s.vis_top = visible_[static_cast<std::size_t>(vis_size_)];
      visible_[static_cast<std::size_t>(vis_size_++)] = j;
    } else if (cnt > 0) {
      lo_ = std::max(lo_, max_v);
    }
    return s;
  }

  void restore(const Saved& s) {
    if (c_.shape == Constraints::Shape::Noncrossing) {
      --vis_size_;
      visible_[static_cast<std::size_t>(vis_size_)] = s.vis_top;
      vis_size_ = s.vis_size;
    }
    lo_ = s.lo;
  }

  void finish(int j, int cnt, int min_pos, int max_v) {
    if (!left_final_ok(j, cnt)) return;
    ld_[static_cast<std::size_t>(j)] = cnt;
    Saved s = advance(j, cnt, min_pos, max_v);
    vertex(j + 1);
    restore(s);
    ld_[static_cast<std::size_t>(j)] = 0;
  }

  void leaf() {
    if (c_.no_isolated)
      for (int v = 1; v <= n_; ++v)
        if (ld_[static_cast<std::size_t>(v)] + rd_[static_cast<std::size_t>(v)] == 0) return;
    if (c_.connected && !is_connected(Diagram(n_, arcs_))) return;
    (*leaf_)(*this);
  }

  int n_;
  Constraints c_;
  std::vector<int> ld_, rd_, cap_;
  std::vector<int> visible_;
  int vis_size_ = 0;
  int lo_ = 0;
  std::vector<std::vector<int>> cand_;
  std::vector<Arc> arcs_;
  const Leaf* leaf_ = nullptr;
  int stop_at_ = -1;
  int start_ = 1;
};

}  // namespace detail

/// Histogram of diagrams on [n] by number of arcs. With workers > 1 the
/// search tree is cut after a few vertices and the subtrees are shared out;
/// the result does not depend on the worker count.
inline std::vector<Count> count_by_arcs(int n, const Constraints& c, int workers = 1) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const std::size_t slots = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2 + 1;
  std::vector<Count> out(slots, 0);
  auto merge = [&](const std::vector<std::uint64_t>& h) {
    for (std::size_t k = 0; k < slots; ++k) out[k] += Count(static_cast<unsigned long>(h[k]));
  };
  detail::Engine root(n, c);
  if (workers <= 1 || n < 6) {
    std::vector<std::uint64_t> h(slots, 0);
    detail::Engine::Leaf leaf = [&h](const detail::Engine& e) { ++h[e.arcs().size()]; };
    root.run(leaf);
    merge(h);
    return out;
  }
  std::vector<detail::Engine> tasks;
  detail::Engine::Leaf collect = [&tasks](const detail::Engine& e) { tasks.push_back(e); };
  root.run(collect, std::min(n, n / 2 + 1));
  std::vector<std::vector<std::uint64_t>> hist(static_cast<std::size_t>(workers), std::vector<std::uint64_t>(slots, 0));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      auto& h = hist[static_cast<std::size_t>(w)];
      detail::Engine::Leaf leaf = [&h](const detail::Engine& e) { ++h[e.arcs().size()]; };
      for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) tasks[t].resume(leaf);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& h : hist) merge(h);
  return out;
}

inline void for_each_diagram(int n, const Constraints& c, const std::function<void(const Diagram&)>& fn) {
  detail::Engine e(n, c);
  detail::Engine::Leaf leaf = [&fn](const detail::Engine& en) { fn(en.diagram()); };
  e.run(leaf);
}

inline void check_limit(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > cap)
    throw LimitError(std::string(what) + " limit exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap) +
                     " (raise it with STACKLAB_LIMITS)");
}

inline Count count_class(int n, const DiagramClass& cls, int workers = 1, const Limits& lim = limits_from_env()) {
  check_limit(n, lim.count_n, "counting");
  Count total = 0;
  for (const auto& v : count_by_arcs(n, cls.constraints(), workers)) total += v;
  return total;
}

/// Every diagram of the class on [n], sorted.
inline std::vector<Diagram> enumerate_class(int n, const DiagramClass& cls, const Limits& lim = limits_from_env()) {
  check_limit(n, lim.enumerate_n, "enumeration");
  std::vector<Diagram> out;
  for_each_diagram(n, cls.constraints(), [&out](const Diagram& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

/// c_0 = c_1 = 1 and c_n = n - 1 otherwise.
inline Count count_connected_zigzag(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return n <= 1 ? Count(1) : Count(n - 1);
}

inline Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// RNA secondary structures on [n] with k arcs: (1/k) C(n-k, k+1) C(n-k-1, k-1).
inline Count count_rna_secondary(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("n and k must be nonnegative");
  if (k == 0) return 1;
  Count v = binomial(n - k, k + 1) * binomial(n - k - 1, k - 1);
  return v / k;
}

inline Count count_type(int n, int m, int i, int workers = 1) {
  return count_class(n, DiagramClass::type_t(m, i), workers);
}
inline Count count_typeG(int n, int m, int workers = 1) { return count_class(n, DiagramClass::type_g(m), workers); }
inline Count count_typeH(int n, int m, int workers = 1) { return count_class(n, DiagramClass::type_h(m), workers); }

/// One reading of "noncrossing graph on [n]" for the stack count experiment.
struct StackConvention {
  bool shared_endpoints;
  bool isolated_vertices;
  std::string describe() const {
    return std::string(shared_endpoints ? "shared endpoints" : "no shared endpoints") + ", " +
           (isolated_vertices ? "isolated vertices allowed" : "no isolated vertices");
  }
  Constraints constraints() const {
    Constraints c;
    if (!shared_endpoints) c.max_degree = 1;
    c.no_isolated = !isolated_vertices;
    return c;
  }
};

struct StackConventionResult {
  StackConvention convention;
  std::vector<Count> counts;  // n = 2..nmax
  bool matches = false;
};

}  // namespace stacklab
