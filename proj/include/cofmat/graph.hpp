#pragma once

// Edge-set combinatorics on the complete graph K_n.
//
// Every EdgeSet carries its ambient n. Edges of K_n are indexed
// 0..C(n,2)-1 in lexicographic (u,v) order, which gives a bitmask
// encoding shared by the oracle, the matroid kernel and the searches.

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "cofmat/errors.hpp"

namespace cofmat {

using VertexId = int;

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxEdges = 128;  // >= C(16,2) = 120

using EdgeMask = std::bitset<kMaxEdges>;

struct Edge {
  VertexId u = 0;
  VertexId v = 1;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw PreconditionError("edge endpoints must differ: " + std::to_string(a));
    if (a < 0 || b < 0) throw PreconditionError("negative vertex index");
  }

  bool incident(VertexId w) const { return u == w || v == w; }
  bool shares_endpoint(const Edge& o) const { return incident(o.u) || incident(o.v); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int num_edges(int n) { return n * (n - 1) / 2; }

inline int edge_index(int n, const Edge& e) {
  return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
}

inline Edge edge_at(int n, int index) {
  int u = 0;
  int row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge(u, u + 1 + index);
}

// A set of at most 32 vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) insert(v);
  }
  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (VertexId v : vs) s.insert(v);
    return s;
  }
  static VertexSet range(int n) { return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1)); }

  void insert(VertexId v) { bits_ |= 1u << v; }
  void erase(VertexId v) { bits_ &= ~(1u << v); }
  bool contains(VertexId v) const { return (bits_ >> v) & 1u; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw CapExceeded("ambient n=" + std::to_string(n) + " outside [0," +
                        std::to_string(kMaxVertices) + "]");
  }
  EdgeSet(int n, std::initializer_list<Edge> edges) : EdgeSet(n) {
    for (const Edge& e : edges) insert(e);
  }
  EdgeSet(int n, const std::vector<Edge>& edges) : EdgeSet(n) {
    for (const Edge& e : edges) insert(e);
  }
  static EdgeSet from_mask(int n, const EdgeMask& mask) {
    EdgeSet s(n);
    s.mask_ = mask & full_mask(n);
    return s;
  }
  static EdgeSet complete(int n) { return from_mask(n, full_mask(n)); }

  int ambient() const { return n_; }
  const EdgeMask& mask() const { return mask_; }
  int size() const { return static_cast<int>(mask_.count()); }
  bool empty() const { return mask_.none(); }

  bool contains(const Edge& e) const { return valid(e) && mask_.test(edge_index(n_, e)); }
  void insert(const Edge& e) {
    check(e);
    mask_.set(edge_index(n_, e));
  }
  void erase(const Edge& e) {
    check(e);
    mask_.reset(edge_index(n_, e));
  }
  EdgeSet with(const Edge& e) const {
    EdgeSet s = *this;
    s.insert(e);
    return s;
  }
  EdgeSet without(const Edge& e) const {
    EdgeSet s = *this;
    s.erase(e);
    return s;
  }

  // Lexicographic order on (u,v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int i = 0, m = num_edges(n_); i < m; ++i)
      if (mask_.test(i)) out.push_back(edge_at(n_, i));
    return out;
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0, m = num_edges(n_); i < m; ++i)
      if (mask_.test(i)) out.push_back(i);
    return out;
  }

  bool subset_of(const EdgeSet& o) const {
    same_ambient(o);
    return (mask_ & ~o.mask_).none();
  }

  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) { return a.combine(b, a.mask_ | b.mask_); }
  friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) { return a.combine(b, a.mask_ & b.mask_); }
  friend EdgeSet operator-(const EdgeSet& a, const EdgeSet& b) { return a.combine(b, a.mask_ & ~b.mask_); }
  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }

  static EdgeMask full_mask(int n) {
    EdgeMask m;
    for (int i = 0, k = num_edges(n); i < k; ++i) m.set(i);
    return m;
  }

 private:
  bool valid(const Edge& e) const { return e.v < n_; }
  void check(const Edge& e) const {
    if (!valid(e))
      throw AmbientMismatch("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " outside K_" + std::to_string(n_));
  }
  void same_ambient(const EdgeSet& o) const {
    if (n_ != o.n_)
      throw AmbientMismatch("edge sets over K_" + std::to_string(n_) + " and K_" +
                            std::to_string(o.n_));
  }
  EdgeSet combine(const EdgeSet& o, const EdgeMask& m) const {
    same_ambient(o);
    EdgeSet s(n_);
    s.mask_ = m;
    return s;
  }

  int n_ = 0;
  EdgeMask mask_;
};

// K(X): all edges on the vertex set X. Empty when |X| < 2.
inline EdgeSet complete_edges(int n, const VertexSet& x) {
  EdgeSet s(n);
  auto vs = x.members();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) s.insert(Edge(vs[i], vs[j]));
  return s;
}

// V(F)
inline VertexSet vertex_support(const EdgeSet& f) {
  VertexSet s;
  for (const Edge& e : f.edges()) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

struct Neighborhood {
  VertexSet neighbors;
  int degree = 0;
};

inline Neighborhood neighbor_edges(const EdgeSet& f, VertexId v) {
  Neighborhood nb;
  for (VertexId w = 0; w < f.ambient(); ++w) {
    if (w == v) continue;
    if (f.contains(Edge(v, w))) nb.neighbors.insert(w);
  }
  nb.degree = nb.neighbors.size();
  return nb;
}

// Edges of F incident with v.
inline EdgeSet star(const EdgeSet& f, VertexId v) {
  EdgeSet s(f.ambient());
  for (VertexId w : neighbor_edges(f, v).neighbors.members()) s.insert(Edge(v, w));
  return s;
}

// F - v: remove every edge at v.
inline EdgeSet remove_vertex(const EdgeSet& f, VertexId v) { return f - star(f, v); }

inline int min_degree(const EdgeSet& f) {
  int best = -1;
  for (VertexId v : vertex_support(f).members()) {
    int d = neighbor_edges(f, v).degree;
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? 0 : best;
}

inline int connected_components(const EdgeSet& f) {
  VertexSet seen;
  VertexSet support = vertex_support(f);
  int comps = 0;
  for (VertexId s : support.members()) {
    if (seen.contains(s)) continue;
    ++comps;
    std::vector<VertexId> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : neighbor_edges(f, x).neighbors.members())
        if (!seen.contains(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
    }
  }
  return comps;
}

// Rank of F in the graphic matroid: |V(F)| - #components of (V(F),F).
inline int graphic_rank(const EdgeSet& f) {
  return vertex_support(f).size() - connected_components(f);
}

// Is the subgraph of F induced on `within` connected?
inline bool connected_on(const EdgeSet& f, const VertexSet& within) {
  auto vs = within.members();
  if (vs.empty()) return true;
  VertexSet seen{vs.front()};
  std::vector<VertexId> stack{vs.front()};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : (neighbor_edges(f, x).neighbors & within).members())
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
  }
  return seen == within;
}

// Is G = (V(F), F) k-connected (more than k vertices, no separator of size < k)?
// Brute force over removal sets; small graphs only.
inline bool is_k_connected(const EdgeSet& f, int k) {
  VertexSet support = vertex_support(f);
  int n = support.size();
  if (n < k + 1) return false;
  auto vs = support.members();
  for (std::uint32_t rm = 0; rm < (1u << n); ++rm) {
    if (std::popcount(rm) > k - 1) continue;
    VertexSet keep = support;
    for (int i = 0; i < n; ++i)
      if ((rm >> i) & 1u) keep.erase(vs[i]);
    if (!connected_on(f, keep)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// d-dimensional k-extensions

enum class ExtensionKind { zero_ext = 0, one_ext = 1, x_replacement = 2 };

struct ExtensionResult {
  EdgeSet edges;
  // two deleted edges shared an endpoint; accepted, but not an X-replacement
  bool v_replacement = false;
};

inline ExtensionResult zero_one_x_extension(const EdgeSet& f, ExtensionKind kind, VertexId new_vertex,
                                            const VertexSet& attach, const std::vector<Edge>& del,
                                            int d = 3) {
  const int k = static_cast<int>(kind);
  const int n = f.ambient();
  if (new_vertex < 0 || new_vertex >= n) throw PreconditionError("new vertex outside ambient K_n");
  if (vertex_support(f).contains(new_vertex))
    throw PreconditionError("new vertex " + std::to_string(new_vertex) + " already incident to F");
  if (static_cast<int>(del.size()) != k)
    throw PreconditionError("a " + std::to_string(k) + "-extension deletes exactly " +
                            std::to_string(k) + " edge(s)");
  if (attach.size() != d + k)
    throw PreconditionError("a " + std::to_string(k) + "-extension attaches exactly " +
                            std::to_string(d + k) + " neighbours");
  if (attach.contains(new_vertex)) throw PreconditionError("new vertex cannot attach to itself");
  if (!attach.subset_of(VertexSet::range(n))) throw PreconditionError("attach set outside ambient K_n");
  ExtensionResult res{f, false};
  for (const Edge& e : del) {
    if (!f.contains(e)) throw PreconditionError("deleted edge not in F");
    if (!attach.contains(e.u) || !attach.contains(e.v))
      throw PreconditionError("endpoints of deleted edges must be attached to the new vertex");
    res.edges.erase(e);
  }
  if (k == 2) {
    if (del[0] == del[1]) throw PreconditionError("deleted edges must be distinct");
    res.v_replacement = del[0].shares_endpoint(del[1]);
  }
  for (VertexId a : attach.members()) res.edges.insert(Edge(new_vertex, a));
  return res;
}

inline std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace cofmat
