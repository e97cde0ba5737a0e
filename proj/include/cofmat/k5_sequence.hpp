#pragma once

// Proper K_{d+2}-sequences and the rank certificates they provide.
//
// For a sequence (C_1, ..., C_t) of (d+2)-vertex sets with K(C_i) not
// contained in K(C_1) ∪ ... ∪ K(C_{i-1}), the value on F is
// |F ∪ K(C_1) ∪ ... ∪ K(C_t)| - t. This bounds the rank of F from above in
// every matroid in which the K_{d+2} copies are circuits, and for d = 3 the
// minimum over sequences equals the rank in the C_2^1-cofactor matroid.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cofmat/errors.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/oracle.hpp"

namespace cofmat {

struct CircuitSequence {
  int n = 0;
  int d = 3;
  std::vector<VertexSet> members;

  int clique_size() const { return d + 2; }
  std::size_t length() const { return members.size(); }

  EdgeSet union_edges() const {
    EdgeSet u(n);
    for (const VertexSet& c : members) u = u | complete_edges(n, c);
    return u;
  }

  // Index of the first member whose edges lie inside the union of its
  // predecessors, or of a member with the wrong size; nullopt if proper.
  std::optional<std::size_t> first_improper() const {
    EdgeSet u(n);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].size() != clique_size() || !members[i].subset_of(VertexSet::range(n))) return i;
      EdgeSet k = complete_edges(n, members[i]);
      if (i > 0 && k.subset_of(u)) return i;
      u = u | k;
    }
    return std::nullopt;
  }
  bool is_proper() const { return !first_improper().has_value(); }
};

// val(F, C) = |F ∪ C_{<=t}| - t
inline int seq_value(const EdgeSet& f, const CircuitSequence& c) {
  if (c.n != f.ambient()) throw AmbientMismatch("sequence and edge set over different K_n");
  if (auto bad = c.first_improper())
    throw PreconditionError("sequence is not proper at index " + std::to_string(*bad));
  return (f | c.union_edges()).size() - static_cast<int>(c.length());
}

// Proper K_{d+2}-sequence of length C(n-d, 2) covering E(K_n): start with
// K(v_0..v_{d+1}); when adding v_i, fix the pivot set S = {v_0..v_{d-1}} and
// append K(S + v_j + v_i) for every earlier v_j outside S.
inline CircuitSequence covering_sequence(int n, int d = 3) {
  if (d < 1) throw PreconditionError("d must be >= 1");
  if (n < d + 2) throw PreconditionError("covering_sequence needs n >= d + 2");
  CircuitSequence seq{n, d, {}};
  seq.members.push_back(VertexSet::range(d + 2));
  const VertexSet pivot = VertexSet::range(d);
  for (int i = d + 2; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (pivot.contains(j)) continue;
      VertexSet c = pivot;
      c.insert(j);
      c.insert(i);
      seq.members.push_back(c);
    }
  return seq;
}

// k-subsets of `pool` in lexicographic order of their sorted vertex lists.
inline std::vector<VertexSet> vertex_subsets(const VertexSet& pool, int k) {
  std::vector<VertexSet> out;
  auto vs = pool.members();
  const int m = static_cast<int>(vs.size());
  if (k > m || k < 0) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(vs[i]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct SequenceSearchOptions {
  int d = 3;
  // candidate vertex pool; empty means V(F)
  VertexSet pool;
  int cap_pool = 9;
  bool force = false;
  // Optional monotone lower bound on the rank of an edge set in some
  // K_{d+2}-matroid. Every extension of a partial sequence with union U has
  // value >= bound(F ∪ U), so subtrees are cut when the bound cannot beat
  // the incumbent. Underestimates only weaken pruning.
  std::function<int(const EdgeSet&)> lower_bound;
  // called with every proper sequence generated during the search
  std::function<void(const CircuitSequence&, int)> on_node;
};

struct SequenceSearchResult {
  int value = 0;
  CircuitSequence witness;
  std::size_t nodes = 0;
};

// Minimum of val(F, C) over proper K_{d+2}-sequences with members drawn from
// the pool. Depth-first branch-and-bound over unions of chosen cliques;
// reaching a union U again with no more cliques than before is dominated.
// Ties prefer fewer cliques, then the first sequence met in the search
// order (candidates tried by increasing marginal value, then lexicographically).
inline SequenceSearchResult min_sequence_value(const EdgeSet& f, SequenceSearchOptions opts = {}) {
  const int n = f.ambient();
  VertexSet pool = opts.pool.empty() ? vertex_support(f) : opts.pool;
  if (!pool.subset_of(VertexSet::range(n))) throw PreconditionError("vertex pool outside ambient K_n");
  if (pool.size() > opts.cap_pool && !opts.force)
    throw CapExceeded("exhaustive sequence search limited to " + std::to_string(opts.cap_pool) +
                      " pool vertices, got " + std::to_string(pool.size()));

  struct Cand {
    VertexSet verts;
    EdgeMask edges;
  };
  std::vector<Cand> cands;
  for (const VertexSet& c : vertex_subsets(pool, opts.d + 2)) cands.push_back({c, complete_edges(n, c).mask()});

  SequenceSearchResult best;
  best.value = f.size();
  best.witness = CircuitSequence{n, opts.d, {}};
  std::size_t best_t = 0;

  std::unordered_map<EdgeMask, std::size_t> seen;
  std::vector<int> chosen;
  const EdgeMask fm = f.mask();

  auto make_seq = [&](const std::vector<int>& ids) {
    CircuitSequence s{n, opts.d, {}};
    for (int i : ids) s.members.push_back(cands[i].verts);
    return s;
  };

  std::function<void(const EdgeMask&)> dfs = [&](const EdgeMask& u) {
    const std::size_t t = chosen.size();
    auto [it, inserted] = seen.try_emplace(u, t);
    if (!inserted) {
      if (it->second >= t) return;
      it->second = t;
    }
    ++best.nodes;
    const EdgeMask fu = fm | u;
    const int val = static_cast<int>(fu.count()) - static_cast<int>(t);
    if (opts.on_node && t > 0) opts.on_node(make_seq(chosen), val);
    if (val < best.value || (val == best.value && t < best_t)) {
      best.value = val;
      best_t = t;
      best.witness = make_seq(chosen);
    }

    std::vector<std::pair<int, int>> order;  // (marginal change, candidate)
    for (int i = 0, m = static_cast<int>(cands.size()); i < m; ++i) {
      if ((cands[i].edges & ~u).none()) continue;
      order.push_back({static_cast<int>((cands[i].edges & ~fu).count()) - 1, i});
    }
    int lb = val - static_cast<int>(order.size());
    if (opts.lower_bound) lb = std::max(lb, opts.lower_bound(EdgeSet::from_mask(n, fu)));
    if (lb > best.value || (lb == best.value && t + 1 >= best_t)) return;

    std::stable_sort(order.begin(), order.end());
    for (auto [delta, i] : order) {
      chosen.push_back(i);
      dfs(u | cands[i].edges);
      chosen.pop_back();
    }
  };
  dfs(EdgeMask{});
  return best;
}

// ---------------------------------------------------------------------------

struct RankCertificate {
  EdgeSet edges;
  int rank = 0;
  EdgeSet independent_set;   // lower witness, |B| = rank
  CircuitSequence sequence;  // upper witness, val(F, C) = rank
};

inline nlohmann::json sequence_json(const CircuitSequence& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VertexSet& m : c.members) arr.push_back(m.members());
  return arr;
}

inline nlohmann::json edges_json(const EdgeSet& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : f.edges()) arr.push_back({e.u, e.v});
  return arr;
}

// Second half of the upper-bound argument: when val(F, C) = r(F), every edge
// of C_{<=t} lies in cl(F) and each edge of F outside C_{<=t} is a coloop of F.
inline bool tightness_conditions_hold(const EdgeSet& f, const CircuitSequence& c, const CofactorOracle& oracle) {
  EdgeSet u = c.union_edges();
  EdgeSet cl = oracle.closure(f);
  if (!u.subset_of(cl)) return false;
  const int r = oracle.rank(f);
  for (const Edge& e : (f - u).edges())
    if (oracle.rank(f.without(e)) != r - 1) return false;
  return true;
}

// Matching lower (independent set) and upper (proper K_5-sequence) witnesses
// for the rank of F. Throws WitnessMismatch if they cannot be matched.
inline RankCertificate rank_certificate(const EdgeSet& f, const CofactorOracle& oracle, SequenceSearchOptions opts = {}) {
  RankCertificate cert;
  cert.edges = f;
  cert.rank = oracle.rank(f);
  cert.independent_set = oracle.greedy_base(f);
  if (!opts.lower_bound) opts.lower_bound = [&oracle](const EdgeSet& x) { return oracle.rank(x); };
  SequenceSearchResult res = min_sequence_value(f, opts);
  cert.sequence = res.witness;
  const bool ok = res.value == cert.rank && cert.independent_set.size() == cert.rank &&
                  tightness_conditions_hold(f, res.witness, oracle);
  if (!ok) {
    nlohmann::json diag = {{"edges", edges_json(f)},
                           {"oracle", oracle.describe()},
                           {"oracle_rank", cert.rank},
                           {"sequence_value", res.value},
                           {"best_sequence", sequence_json(res.witness)},
                           {"independent_set", edges_json(cert.independent_set)}};
    throw WitnessMismatch("rank witnesses disagree: oracle " + std::to_string(cert.rank) + " vs sequence " +
                              std::to_string(res.value),
                          diag.dump());
  }
  return cert;
}

struct SimplicialVertex {
  VertexId vertex = -1;
  EdgeSet base;
};

// Cyclic flat X (checked): find v with K(N_X(v)) ⊆ X and a base of X in
// which v has degree d. Any base extending a base of X - v has exactly
// r(X) - r(X - v) edges at v, so the scan tests that difference and then
// builds the base greedily: K(N_X(v)) first, the rest of X - v, then v's star.
inline SimplicialVertex find_simplicial_base_vertex(const EdgeSet& x, const CofactorOracle& oracle, int d = 3) {
  if (!oracle.is_flat(x)) throw PreconditionError("find_simplicial_base_vertex: X is not a flat");
  const int r = oracle.rank(x);
  for (const Edge& e : x.edges())
    if (oracle.rank(x.without(e)) < r) throw PreconditionError("find_simplicial_base_vertex: X is not cyclic");
  const int n = x.ambient();
  for (VertexId v : vertex_support(x).members()) {
    VertexSet nb = neighbor_edges(x, v).neighbors;
    EdgeSet knb = complete_edges(n, nb);
    if (!knb.subset_of(x)) continue;
    EdgeSet sv = star(x, v);
    if (r - oracle.rank(x - sv) != d) continue;
    std::vector<Edge> order = knb.edges();
    for (const Edge& e : (x - sv - knb).edges()) order.push_back(e);
    for (const Edge& e : sv.edges()) order.push_back(e);
    EdgeSet base = oracle.greedy_base(x, order);
    if (base.size() == r && neighbor_edges(base, v).degree == d) return {v, base};
  }
  throw WitnessMismatch("no simplicial vertex with a degree-" + std::to_string(d) + " base",
                        nlohmann::json{{"edges", edges_json(x)}, {"oracle", oracle.describe()}}.dump());
}

}  // namespace cofmat
