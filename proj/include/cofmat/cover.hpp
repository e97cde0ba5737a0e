#pragma once

// Clique covers of edge sets, hinges, and the Dress rank formula.
//
// A cover of F is a family of vertex sets X_i with |X_i| >= 2 whose cliques
// K(X_i) together contain F. A hinge is a pair {x, y} that is the exact
// intersection of two members; its degree is the number of members
// containing it. For the C_2^1-cofactor matroid
//
//   val_D(X) = sum (3|X_i| - 6) - sum_hinges (deg(h) - 1)
//
// bounds the rank of F from above whenever the cover is non-degenerate in
// the matroid, and a flat F has rank |F_0| + val_D for the cover by its
// maximal cliques of size >= 5, F_0 being the edges left uncovered.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cofmat/errors.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/k5_sequence.hpp"
#include "cofmat/oracle.hpp"

namespace cofmat {

// Lexicographic order on sorted vertex lists.
inline bool vertex_set_less(const VertexSet& a, const VertexSet& b) {
  auto x = a.members();
  auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

struct CliqueCover {
  int n = 0;
  std::vector<VertexSet> members;

  std::size_t size() const { return members.size(); }

  EdgeSet covered_edges() const {
    EdgeSet u(n);
    for (const VertexSet& x : members) u = u | complete_edges(n, x);
    return u;
  }
  bool covers(const EdgeSet& f) const { return f.subset_of(covered_edges()); }
};

struct MaximalCliques {
  CliqueCover cover;  // maximal cliques of size >= min_size, lexicographic
  EdgeSet uncovered;  // F_0
};

// Bron-Kerbosch with pivoting on the graph (V(F), F).
inline MaximalCliques maximal_cliques(const EdgeSet& f, int min_size = 5) {
  const int n = f.ambient();
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : f.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<VertexSet> found;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> bk = [&](std::uint32_t r, std::uint32_t p,
                                                                            std::uint32_t x) {
    if (!p && !x) {
      if (std::popcount(r) >= min_size) found.emplace_back(r);
      return;
    }
    if (std::popcount(r) + std::popcount(p) < min_size) return;
    std::uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint32_t b = px; b; b &= b - 1) {
      int u = std::countr_zero(b);
      int c = std::popcount(p & adj[u]);
      if (c > best) best = c, pivot = u;
    }
    for (std::uint32_t b = p & ~adj[pivot]; b; b &= b - 1) {
      int v = std::countr_zero(b);
      bk(r | (1u << v), p & adj[v], x & adj[v]);
      p &= ~(1u << v);
      x |= 1u << v;
    }
  };
  bk(0, vertex_support(f).bits(), 0);
  std::sort(found.begin(), found.end(), vertex_set_less);
  MaximalCliques out{CliqueCover{n, found}, EdgeSet(n)};
  out.uncovered = f - out.cover.covered_edges();
  return out;
}

// Hinges of a family with their degrees, keyed by the hinge edge.
struct HingeTable {
  std::map<std::pair<int, int>, int> degree;

  std::size_t size() const { return degree.size(); }
  EdgeSet edges(int n) const {
    EdgeSet s(n);
    for (const auto& [h, d] : degree) s.insert(Edge(h.first, h.second));
    return s;
  }
  int excess() const {
    int t = 0;
    for (const auto& [h, d] : degree) t += d - 1;
    return t;
  }
};

inline HingeTable hinges(const std::vector<VertexSet>& fam) {
  HingeTable t;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      VertexSet c = fam[i] & fam[j];
      if (c.size() != 2) continue;
      auto v = c.members();
      t.degree[{v[0], v[1]}] = 0;
    }
  for (auto& [h, d] : t.degree)
    for (const VertexSet& x : fam)
      if (x.contains(h.first) && x.contains(h.second)) ++d;
  return t;
}

// Members pairwise sharing at most t vertices.
inline std::optional<std::pair<std::size_t, std::size_t>> thin_violation(const std::vector<VertexSet>& fam, int t) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if ((fam[i] & fam[j]).size() > t) return std::pair{i, j};
  return std::nullopt;
}
inline bool is_thin(const std::vector<VertexSet>& fam, int t) { return !thin_violation(fam, t).has_value(); }

inline int val_D(const std::vector<VertexSet>& fam) {
  int v = 0;
  for (const VertexSet& x : fam) {
    if (x.size() < 2) throw PreconditionError("cover members need at least two vertices");
    v += 3 * x.size() - 6;
  }
  return v - hinges(fam).excess();
}
inline int val_D(const CliqueCover& c) { return val_D(c.members); }

inline constexpr std::size_t kShellingSearchCap = 12;

namespace detail {

// Finds an order X_1..X_m such that `admissible(prefix_mask, next)` holds at
// every step. Admissibility depends only on the set of earlier members, so
// failed prefixes are memoised. Members are tried by increasing `priority`.
inline std::optional<std::vector<int>> ordered_search(
    std::size_t m, const std::function<bool(std::uint32_t, int)>& admissible,
    const std::function<int(std::uint32_t, int)>& priority, bool greedy_only) {
  std::vector<int> order;
  std::vector<std::uint8_t> dead;
  if (!greedy_only) dead.assign(std::size_t{1} << m, 0);
  const std::uint32_t all = m >= 32 ? ~0u : ((1u << m) - 1);
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t used) -> bool {
    if (used == all) return true;
    if (!greedy_only && dead[used]) return false;
    std::vector<std::pair<int, int>> next;
    for (int i = 0; i < static_cast<int>(m); ++i)
      if (!(used >> i & 1u) && admissible(used, i)) next.push_back({priority(used, i), i});
    std::stable_sort(next.begin(), next.end());
    for (auto [p, i] : next) {
      order.push_back(i);
      if (go(used | (1u << i))) return true;
      order.pop_back();
      if (greedy_only) return false;
    }
    if (!greedy_only) dead[used] = 1;
    return false;
  };
  if (go(0)) return order;
  return std::nullopt;
}

inline VertexSet union_of(const std::vector<VertexSet>& fam, std::uint32_t mask) {
  VertexSet u;
  for (std::uint32_t b = mask; b; b &= b - 1) u = u | fam[std::countr_zero(b)];
  return u;
}

inline std::optional<std::vector<int>> ordering(const std::vector<VertexSet>& fam,
                                                const std::function<bool(std::uint32_t, int)>& admissible,
                                                const std::function<int(std::uint32_t, int)>& priority,
                                                std::size_t cap, const char* what) {
  if (fam.size() > 31) throw CapExceeded(std::string(what) + ": family too large");
  if (auto greedy = ordered_search(fam.size(), admissible, priority, true)) return greedy;
  if (fam.size() > cap)
    throw CapExceeded(std::string(what) + ": greedy order failed and exhaustive search is limited to " +
                      std::to_string(cap) + " members");
  return ordered_search(fam.size(), admissible, priority, false);
}

}  // namespace detail

// Order with |X_i ∩ (X_1 ∪ ... ∪ X_{i-1})| <= k for all i; nullopt if none.
inline std::optional<std::vector<int>> find_shellable_order(const std::vector<VertexSet>& fam, int k,
                                                            std::size_t cap = kShellingSearchCap) {
  auto meet = [&](std::uint32_t used, int i) { return (detail::union_of(fam, used) & fam[i]).size(); };
  return detail::ordering(
      fam, [&](std::uint32_t used, int i) { return meet(used, i) <= k; }, meet, cap, "find_shellable_order");
}
inline std::optional<std::vector<int>> find_shellable_order(const CliqueCover& c, int k,
                                                            std::size_t cap = kShellingSearchCap) {
  return find_shellable_order(c.members, k, cap);
}

namespace detail {

// hinges of {X_j : j in used} ∪ {X_i} that lie inside X_i
inline EdgeSet hinges_inside(const std::vector<VertexSet>& fam, int n, std::uint32_t used, int i) {
  EdgeSet h(n);
  for (std::uint32_t a = used; a; a &= a - 1) {
    int j = std::countr_zero(a);
    VertexSet c = fam[j] & fam[i];
    if (c.size() == 2) {
      auto v = c.members();
      h.insert(Edge(v[0], v[1]));
    }
    for (std::uint32_t b = a & (a - 1); b; b &= b - 1) {
      VertexSet d = fam[j] & fam[std::countr_zero(b)];
      if (d.size() == 2 && d.subset_of(fam[i])) {
        auto v = d.members();
        h.insert(Edge(v[0], v[1]));
      }
    }
  }
  return h;
}

}  // namespace detail

// Order in which, for every i, the hinges of {X_1..X_i} inside X_i form an
// independent set of the oracle's matroid.
inline std::optional<std::vector<int>> find_degenerate_order(const CliqueCover& c, const CofactorOracle& oracle,
                                                             std::size_t cap = kShellingSearchCap) {
  const auto& fam = c.members;
  auto h = [&](std::uint32_t used, int i) { return detail::hinges_inside(fam, c.n, used, i); };
  return detail::ordering(
      fam, [&](std::uint32_t used, int i) { return oracle.is_independent(h(used, i)); },
      [&](std::uint32_t used, int i) { return h(used, i).size(); }, cap, "find_degenerate_order");
}
inline bool is_M_degenerate(const CliqueCover& c, const CofactorOracle& oracle,
                            std::size_t cap = kShellingSearchCap) {
  return find_degenerate_order(c, oracle, cap).has_value();
}

// Same with "at most k hinges inside X_i" in place of independence.
inline std::optional<std::vector<int>> find_k_degenerate_order(const CliqueCover& c, int k,
                                                               std::size_t cap = kShellingSearchCap) {
  const auto& fam = c.members;
  auto h = [&](std::uint32_t used, int i) { return detail::hinges_inside(fam, c.n, used, i).size(); };
  return detail::ordering(
      fam, [&](std::uint32_t used, int i) { return h(used, i) <= k; }, h, cap, "find_k_degenerate_order");
}
inline bool is_k_degenerate(const CliqueCover& c, int k, std::size_t cap = kShellingSearchCap) {
  return find_k_degenerate_order(c, k, cap).has_value();
}

inline nlohmann::json cover_json(const std::vector<VertexSet>& fam) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VertexSet& x : fam) arr.push_back(x.members());
  return arr;
}

// {"x-y": degree, ...}
inline nlohmann::json hinges_json(const HingeTable& t) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [h, d] : t.degree) obj[to_string(Edge(h.first, h.second))] = d;
  return obj;
}

// Upper bound r(F) <= val_D(cover) for a cover of F that is degenerate in
// the oracle's matroid. Throws PreconditionError if the cover is not a
// cover of F or not degenerate, WitnessMismatch if the bound is violated.
inline int cover_upper_bound(const EdgeSet& f, const CliqueCover& cover, const CofactorOracle& oracle) {
  if (cover.n != f.ambient()) throw AmbientMismatch("cover and edge set over different K_n");
  for (const VertexSet& x : cover.members)
    if (x.size() < 5) throw PreconditionError("cover members need at least five vertices");
  if (!cover.covers(f)) throw PreconditionError("family does not cover the edge set");
  if (!is_M_degenerate(cover, oracle)) throw PreconditionError("cover is not degenerate in the matroid");
  const int v = val_D(cover);
  const int r = oracle.rank(f);
  if (r > v)
    throw WitnessMismatch("rank " + std::to_string(r) + " exceeds cover value " + std::to_string(v),
                          nlohmann::json{{"edges", edges_json(f)}, {"cover", cover_json(cover.members)},
                                         {"oracle", oracle.describe()}}
                              .dump());
  return v;
}

struct DressResult {
  bool input_flat = true;  // false when the flat is the closure of the input
  EdgeSet flat;
  CliqueCover cliques;
  EdgeSet f0;
  HingeTable hinge_table;
  int val_d = 0;
  int value = 0;  // |F_0| + val_D
  int rank = 0;   // oracle rank
  std::vector<int> shelling_order;

  nlohmann::json to_json() const {
    return {{"flat", input_flat},         {"edges", edges_json(flat)},
            {"cliques", cover_json(cliques.members)},
            {"F0", edges_json(f0)},       {"hinges", hinges_json(hinge_table)},
            {"val_D", val_d},             {"rank", rank},
            {"shelling_order", shelling_order}};
  }
};

// Rank of a flat from its maximal cliques of size >= 5. The cliques are
// checked to be 2-thin and 4-shellable and the value to match the oracle;
// any failure throws WitnessMismatch with the computed data attached.
inline DressResult dress_rank(const EdgeSet& f, const CofactorOracle& oracle) {
  if (!oracle.is_flat(f)) throw PreconditionError("dress_rank: input is not a flat");
  DressResult res;
  res.flat = f;
  MaximalCliques mc = maximal_cliques(f, 5);
  res.cliques = mc.cover;
  res.f0 = mc.uncovered;
  res.hinge_table = hinges(res.cliques.members);
  res.val_d = val_D(res.cliques);
  res.value = res.f0.size() + res.val_d;
  res.rank = oracle.rank(f);
  std::string problem;
  if (!is_thin(res.cliques.members, 2)) problem = "maximal cliques are not 2-thin";
  auto order = find_shellable_order(res.cliques, 4);
  if (order)
    res.shelling_order = *order;
  else if (problem.empty())
    problem = "maximal cliques are not 4-shellable";
  if (problem.empty() && res.value != res.rank)
    problem = "cover value " + std::to_string(res.value) + " differs from rank " + std::to_string(res.rank);
  if (!problem.empty()) throw WitnessMismatch("dress_rank: " + problem, res.to_json().dump());
  return res;
}

struct CoverSearchResult {
  int value = 0;
  std::vector<VertexSet> family;
};

// Minimum of |F - ∪K(X_i)| + val_D over 2-thin, 4-shellable families of at
// most `max_members` vertex sets of size >= 5 in K_n. Exhaustive; meant for
// n <= 7 or so.
inline CoverSearchResult min_shellable_cover_value(const EdgeSet& f, std::size_t max_members = 3) {
  const int n = f.ambient();
  std::vector<VertexSet> cand;
  for (int k = 5; k <= n; ++k)
    for (const VertexSet& s : vertex_subsets(VertexSet::range(n), k)) cand.push_back(s);
  CoverSearchResult best{f.size(), {}};
  std::vector<VertexSet> fam;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!fam.empty()) {
      EdgeSet cov(n);
      for (const VertexSet& x : fam) cov = cov | complete_edges(n, x);
      int v = (f - cov).size() + val_D(fam);
      if (v < best.value && find_shellable_order(fam, 4)) best = {v, fam};
    }
    if (fam.size() == max_members) return;
    for (std::size_t i = start; i < cand.size(); ++i) {
      fam.push_back(cand[i]);
      if (is_thin(fam, 2)) rec(i + 1);
      fam.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace cofmat
