#pragma once

// Explicit matroids on E(K_n): element i of the ground set is the edge with
// lexicographic index i, so subset bitmasks and edge masks coincide.

#include <string>
#include <vector>

#include "cofmat/errors.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/oracle.hpp"

namespace cofmat {

inline Subset to_subset(const EdgeSet& f) {
  if (num_edges(f.ambient()) > kMaxGround) throw CapExceeded("edge set too large for an explicit ground set");
  return static_cast<Subset>(f.mask().to_ulong());
}

inline EdgeSet to_edge_set(int n, Subset x) { return EdgeSet::from_mask(n, EdgeMask(x)); }

// The oracle's matroid as an explicit matroid. Uses the incremental rank
// table sweep when C(n,2) <= 22; otherwise a lazy rank function.
inline ExplicitMatroid oracle_matroid(const CofactorOracle& oracle) {
  const int n = oracle.n();
  const int g = num_edges(n);
  if (g > kMaxGround) throw CapExceeded("C(n,2) = " + std::to_string(g) + " exceeds the explicit ground cap");
  if (g <= 22) return ExplicitMatroid::from_table(g, oracle.rank_table());
  return ExplicitMatroid::from_rank_function(g, [oracle, n](Subset x) { return oracle.rank(to_edge_set(n, x)); });
}

// Edge-index subsets of the copies of K_k in K_n.
inline std::vector<Subset> clique_subsets(int n, int k) {
  std::vector<Subset> out;
  if (num_edges(n) > kMaxGround) throw CapExceeded("clique_subsets: C(n,2) too large");
  if (k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(to_subset(complete_edges(n, VertexSet::of(idx))));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// The rank-10 matroid on E(K_n) whose non-spanning circuits are exactly the
// K_5 copies, defined combinatorially (no field arithmetic). For n <= 6 any
// two K_5 copies span E(K_n), so r(X) = min(|X|, 10) except that each K_5
// copy has rank 9.
inline ExplicitMatroid k5_paving_matroid(int n) {
  if (n < 5 || n > 6) throw PreconditionError("k5_paving_matroid is defined here for n = 5, 6");
  const int g = num_edges(n);
  std::vector<std::uint8_t> table(std::size_t{1} << g);
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(std::min(card(static_cast<Subset>(x)), 10));
  for (Subset k5 : clique_subsets(n, 5)) table[k5] = 9;
  return ExplicitMatroid::from_table(g, std::move(table));
}

// cyc(F) in the oracle's matroid: F minus its coloops. Removing coloops
// creates no new ones, so one pass suffices.
inline EdgeSet cyclic_part(const EdgeSet& f, const CofactorOracle& oracle) {
  const int r = oracle.rank(f);
  EdgeSet out = f;
  for (const Edge& e : f.edges())
    if (oracle.rank(f.without(e)) < r) out.erase(e);
  return out;
}

inline bool is_cyclic(const EdgeSet& f, const CofactorOracle& oracle) { return cyclic_part(f, oracle) == f; }

}  // namespace cofmat
