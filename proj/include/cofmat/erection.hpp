#pragma once

// Modular cyclic families, free erections and free elevations.
//
// For a matroid M and a family C0 of cyclic sets, the modular cyclic
// closure is the smallest down-closed family of cyclic sets containing C0
// (and ∅) that contains X ∪ Y for every modular pair X, Y in it. With
// C0 = CF_M (non-spanning cyclic flats) it determines the free erection:
//
//   r_N(X) = r_M(X)      if cyc_M(X) lies in the closure,
//   r_N(X) = r_M(X) + 1  otherwise.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cofmat/errors.hpp"
#include "cofmat/matroid.hpp"

namespace cofmat {

namespace detail {

// marks every subset of a marked set, then keeps only cyclic ones
inline void lower_closure_in_place(std::vector<std::uint8_t>& mark, const std::vector<Subset>& cyc_of) {
  for (std::size_t x = mark.size(); x-- > 0;) {
    if (!mark[x]) continue;
    for (Subset bits = static_cast<Subset>(x); bits; bits &= bits - 1) mark[x & ~(bits & (~bits + 1))] = 1;
  }
  for (std::size_t x = 0; x < mark.size(); ++x)
    if (mark[x] && cyc_of[x] != x) mark[x] = 0;
  mark[0] = 1;
}

}  // namespace detail

struct ClosureStats {
  int rounds = 0;
  std::size_t pairs_tested = 0;
};

// Algorithm: S_0 = C0; S_i = S_{i-1} ∪ {X ∪ Y : X, Y in the lower closure of
// S_{i-1}, modular}; stop when the lower closure no longer grows. Pairs are
// processed semi-naively: each round only pairs involving a set that
// entered the lower closure in the previous round are tested.
inline SubsetFamily modular_cyclic_closure(const ExplicitMatroid& m_in, const SubsetFamily& c0,
                                           int cap = kDefaultEnumerationCap, ClosureStats* stats = nullptr) {
  ExplicitMatroid m = m_in.materialized(cap);
  auto cyc_of = cyc_table(m, cap);
  const std::size_t total = cyc_of.size();
  for (Subset x : c0)
    if (cyc_of[x] != x) throw PreconditionError("seed family member " + std::to_string(x) + " is not cyclic");

  std::vector<std::uint8_t> low(total, 0);
  for (Subset x : c0) low[x] = 1;
  detail::lower_closure_in_place(low, cyc_of);

  std::vector<Subset> old_members;
  std::vector<Subset> fresh;
  for (std::size_t x = 0; x < total; ++x)
    if (low[x]) fresh.push_back(static_cast<Subset>(x));

  ClosureStats local;
  while (!fresh.empty()) {
    ++local.rounds;
    std::vector<Subset> added;
    auto consider = [&](Subset x, Subset y) {
      Subset u = x | y;
      if (low[u]) return;
      ++local.pairs_tested;
      if (m.rank(x) + m.rank(y) == m.rank(x & y) + m.rank(u)) {
        low[u] = 1;  // provisional; the lower-closure pass below settles membership
        added.push_back(u);
      }
    };
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (Subset y : old_members) consider(fresh[i], y);
      for (std::size_t j = i + 1; j < fresh.size(); ++j) consider(fresh[i], fresh[j]);
    }
    old_members.insert(old_members.end(), fresh.begin(), fresh.end());
    fresh.clear();
    if (added.empty()) break;
    std::vector<std::uint8_t> before = low;
    for (Subset u : added) before[u] = 0;
    detail::lower_closure_in_place(low, cyc_of);
    for (std::size_t x = 0; x < total; ++x)
      if (low[x] && !before[x]) fresh.push_back(static_cast<Subset>(x));
  }
  if (stats) *stats = local;

  std::vector<Subset> out;
  for (std::size_t x = 0; x < total; ++x)
    if (low[x]) out.push_back(static_cast<Subset>(x));
  return SubsetFamily(std::move(out));
}

struct FamilyCheck {
  bool ok = true;
  std::string detail;
};

// Brute-force check of the three defining properties of a modular cyclic family.
inline FamilyCheck check_modular_cyclic_family(const ExplicitMatroid& m_in, const SubsetFamily& fam,
                                               int cap = kDefaultEnumerationCap) {
  ExplicitMatroid m = m_in.materialized(cap);
  auto cyc_of = cyc_table(m, cap);
  std::vector<std::uint8_t> member(cyc_of.size(), 0);
  for (Subset x : fam) {
    if (cyc_of[x] != x) return {false, "member " + std::to_string(x) + " is not cyclic"};
    member[x] = 1;
  }
  if (!member[0]) return {false, "empty set missing"};
  for (Subset x : fam)
    for (Subset y = (x - 1) & x;; y = (y - 1) & x) {
      if (cyc_of[y] == y && !member[y])
        return {false, "not down-closed: " + std::to_string(y) + " below " + std::to_string(x)};
      if (y == 0) break;
    }
  const auto& mem = fam.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!member[mem[i] | mem[j]] && is_modular_pair(m, mem[i], mem[j]))
        return {false, "modular pair " + std::to_string(mem[i]) + "," + std::to_string(mem[j]) + " not closed"};
  return {};
}

struct ErectionStep {
  ExplicitMatroid matroid;     // the free erection (== input when trivial)
  bool trivial = false;
  SubsetFamily closure;        // modular cyclic closure of CF_M
  std::size_t cyclic_sets = 0;
  std::size_t cyclic_flats = 0;  // |CF_M|
  ClosureStats stats;
  double elapsed_ms = 0;
};

inline ErectionStep free_erection(const ExplicitMatroid& m_in, int cap = kDefaultEnumerationCap) {
  auto t0 = std::chrono::steady_clock::now();
  ExplicitMatroid m = m_in.materialized(cap);
  ErectionStep step;
  SubsetFamily cf = cyclic_flats(m, cap);
  step.cyclic_flats = cf.size();
  step.closure = modular_cyclic_closure(m, cf, cap, &step.stats);
  auto cyc_of = cyc_table(m, cap);
  std::vector<std::uint8_t> in_closure(cyc_of.size(), 0);
  for (Subset x : step.closure) in_closure[x] = 1;
  for (std::size_t x = 0; x < cyc_of.size(); ++x)
    if (cyc_of[x] == x) ++step.cyclic_sets;
  step.trivial = step.closure.size() == step.cyclic_sets;
  if (step.trivial) {
    step.matroid = m;
  } else {
    std::vector<std::uint8_t> t = m.table();
    for (std::size_t x = 0; x < t.size(); ++x)
      if (!in_closure[cyc_of[x]]) ++t[x];
    step.matroid = ExplicitMatroid::from_table(m.ground_size(), std::move(t));
  }
  step.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return step;
}

inline bool has_nontrivial_erection(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  return !free_erection(m, cap).trivial;
}

// M_0, M_1, ..., M_k with M_i the free erection of M_{i-1}; M_k has no
// non-trivial erection. `steps[i]` records the erection computed from
// matroids[i]; the last step is the trivial one that ends the chain.
struct ErectionChain {
  std::vector<ExplicitMatroid> matroids;
  std::vector<ErectionStep> steps;

  const ExplicitMatroid& elevation() const { return matroids.back(); }
  int nontrivial_steps() const { return static_cast<int>(matroids.size()) - 1; }
};

inline ErectionChain free_elevation(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  ErectionChain chain;
  chain.matroids.push_back(m.materialized(cap));
  while (true) {
    ErectionStep step = free_erection(chain.matroids.back(), cap);
    bool trivial = step.trivial;
    ExplicitMatroid next = step.matroid;
    chain.steps.push_back(std::move(step));
    if (trivial) break;
    chain.matroids.push_back(std::move(next));
  }
  return chain;
}

// X is a union of members of C iff X equals the union of the members inside it.
inline bool is_union_of(Subset x, const SubsetFamily& c) {
  Subset u = 0;
  for (Subset s : c)
    if (subset_of(s, x)) u |= s;
  return u == x;
}

struct CoverCheck {
  bool holds = true;
  Subset witness = 0;  // a cyclic flat of the elevation not covered, if any
};

// Every cyclic flat (spanning ones included) of the final matroid is a union
// of members of C. Requires the same of M_0; a failure there throws.
inline CoverCheck check_cyclic_flat_cover(const ErectionChain& chain, const SubsetFamily& c,
                                          int cap = kDefaultEnumerationCap) {
  const ExplicitMatroid& m0 = chain.matroids.front();
  for (Subset x : c)
    if (!is_circuit(m0, x)) throw PreconditionError("family member " + std::to_string(x) + " is not a circuit of M_0");
  for (Subset f : cyclic_flats(m0, cap, true))
    if (!is_union_of(f, c))
      throw PreconditionError("cyclic flat " + std::to_string(f) + " of M_0 is not a union of the family");
  for (Subset f : cyclic_flats(chain.elevation(), cap, true))
    if (!is_union_of(f, c)) return {false, f};
  return {};
}

}  // namespace cofmat
