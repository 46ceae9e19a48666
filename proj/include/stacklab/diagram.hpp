#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stacklab {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arc {
  int i = 0;
  int j = 0;
  int length() const { return j - i; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Vertices 1..n on a line with a set of arcs (i, j), i < j, kept sorted.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n, std::vector<Arc> arcs = {}) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw DiagramError("vertex count must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
      const Arc& a = arcs_[k];
      if (a.i >= a.j) throw DiagramError("arc " + std::to_string(a.i) + "-" + std::to_string(a.j) + " is not increasing");
      if (a.i < 1 || a.j > n) throw DiagramError("arc endpoint out of range 1.." + std::to_string(n));
      if (k && arcs_[k - 1] == a) throw DiagramError("duplicate arc " + std::to_string(a.i) + "-" + std::to_string(a.j));
    }
  }

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(const Arc& a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend bool operator<(const Diagram& a, const Diagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.arcs_ < b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Left and right degrees, indexed 1..n (slots 0 and n+1 stay zero).
struct DegreeProfile {
  std::vector<int> ld, rd;
  explicit DegreeProfile(const Diagram& d)
      : ld(static_cast<std::size_t>(d.n()) + 2, 0), rd(static_cast<std::size_t>(d.n()) + 2, 0) {
    for (const Arc& a : d.arcs()) {
      ++rd[static_cast<std::size_t>(a.i)];
      ++ld[static_cast<std::size_t>(a.j)];
    }
  }
  int deg(int v) const { return ld[static_cast<std::size_t>(v)] + rd[static_cast<std::size_t>(v)]; }
};

inline std::string render(const Diagram& d) {
  std::string s = "n=" + std::to_string(d.n()) + ";";
  for (const Arc& a : d.arcs()) s += " " + std::to_string(a.i) + "-" + std::to_string(a.j);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Diagram& d) { return os << render(d); }

/// Parses "n=<int>; i-j i-j ...".
inline Diagram parse_diagram(std::string_view text) {
  auto fail = [&](const std::string& why) { throw DiagramError(why + ": \"" + std::string(text) + "\""); };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 9) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (text.substr(pos, 2) != "n=") fail("missing n=");
  pos += 2;
  const int n = read_int();
  skip_ws();
  if (pos >= text.size() || text[pos] != ';') fail("missing ';'");
  ++pos;
  std::vector<Arc> arcs;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    Arc a;
    a.i = read_int();
    if (pos >= text.size() || text[pos] != '-') fail("expected '-' in arc");
    ++pos;
    a.j = read_int();
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) fail("junk after arc");
    arcs.push_back(a);
  }
  return Diagram(n, std::move(arcs));
}

inline bool arcs_cross(const Arc& a, const Arc& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}
inline bool arcs_nest(const Arc& a, const Arc& b) {
  return (a.i < b.i && b.j < a.j) || (b.i < a.i && a.j < b.j);
}

inline bool is_stack(const Diagram& d) {
  const auto& A = d.arcs();
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = x + 1; y < A.size(); ++y)
      if (arcs_cross(A[x], A[y])) return false;
  return true;
}

inline bool is_queue(const Diagram& d) {
  const auto& A = d.arcs();
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = x + 1; y < A.size(); ++y)
      if (arcs_nest(A[x], A[y])) return false;
  return true;
}

inline bool is_zigzag(const Diagram& d) {
  if (!is_stack(d)) return false;
  DegreeProfile p(d);
  for (int v = 1; v <= d.n(); ++v) {
    if (p.deg(v) > 2) return false;
    if (std::min(p.ld[static_cast<std::size_t>(v)], p.rd[static_cast<std::size_t>(v)]) > 0) return false;
  }
  return true;
}

inline void require_regularity(int m) {
  if (m < 2) throw DiagramError("m must be at least 2, got " + std::to_string(m));
}

inline bool is_m_regular_linear(const Diagram& d, int m) {
  require_regularity(m);
  if (!is_stack(d)) return false;
  for (const Arc& a : d.arcs())
    if (a.length() < m) return false;
  DegreeProfile p(d);
  for (int v = 1; v <= d.n(); ++v)
    if (p.deg(v) > 2) return false;
  return true;
}

/// Conditions (1) and (2) on positions 0..n+1, where position 0 carries
/// left-degree ld_left and position n+1 carries right-degree rd_right.
inline bool check_with_boundary(const Diagram& d, int m, int ld_left, int rd_right) {
  require_regularity(m);
  if (ld_left < 0 || ld_left > 2 || rd_right < 0 || rd_right > 2)
    throw DiagramError("boundary degrees must lie in {0,1,2}");
  if (!is_zigzag(d)) return false;
  const int n = d.n();
  DegreeProfile p(d);
  std::vector<int> ld = p.ld, rd = p.rd;
  ld[0] = ld_left;
  rd[static_cast<std::size_t>(n + 1)] = rd_right;
  for (int i = 0; i + m - 1 <= n + 1; ++i)
    if (ld[static_cast<std::size_t>(i)] + rd[static_cast<std::size_t>(i + m - 1)] > 2) return false;
  for (int i = 0; i <= n + 1; ++i) {
    if (ld[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i + 1; j <= n + 1 && j - i < m - 1; ++j)
      if (rd[static_cast<std::size_t>(j)] > 0) return false;
  }
  return true;
}

inline bool is_m_reduced(const Diagram& d, int m) { return check_with_boundary(d, m, 0, 0); }

/// Mirror image i -> n + 1 - i.
inline Diagram reflect(const Diagram& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({d.n() + 1 - a.j, d.n() + 1 - a.i});
  return Diagram(d.n(), std::move(arcs));
}

/// Component label (smallest vertex of the component) for each vertex 1..n.
inline std::vector<int> component_labels(const Diagram& d) {
  std::vector<int> parent(static_cast<std::size_t>(d.n()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Arc& a : d.arcs()) {
    int x = find(a.i), y = find(a.j);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
  for (int v = 1; v <= d.n(); ++v) parent[static_cast<std::size_t>(v)] = find(v);
  return parent;
}

inline bool is_connected(const Diagram& d) {
  auto lab = component_labels(d);
  for (int v = 1; v <= d.n(); ++v)
    if (lab[static_cast<std::size_t>(v)] != 1) return false;
  return true;
}

/// The arcs of d lying inside [lo, hi], relabelled to start at 1.
inline Diagram window(const Diagram& d, int lo, int hi) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (a.i >= lo && a.j <= hi) arcs.push_back({a.i - lo + 1, a.j - lo + 1});
  return Diagram(std::max(0, hi - lo + 1), std::move(arcs));
}

}  // namespace stacklab
