#pragma once

// Matroids on small ground sets {0, ..., g-1} given by a rank function on
// bitmask subsets. Enumeration operations materialise a dense rank table
// and are capped at 16 elements unless the caller raises the cap.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cofmat/errors.hpp"

namespace cofmat {

using Subset = std::uint32_t;

inline int card(Subset x) { return std::popcount(x); }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset full_subset(int g) { return g >= 32 ? ~Subset{0} : ((Subset{1} << g) - 1); }

inline constexpr int kMaxGround = 24;
inline constexpr int kDefaultEnumerationCap = 16;

// A deduplicated, sorted family of subsets.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Subset x) const { return std::binary_search(members_.begin(), members_.end(), x); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<Subset> members_;
};

class ExplicitMatroid {
 public:
  using RankFn = std::function<int(Subset)>;

  ExplicitMatroid() : ExplicitMatroid(from_table(0, {0})) {}

  static ExplicitMatroid from_table(int g, std::vector<std::uint8_t> table) {
    check_ground(g);
    if (table.size() != (std::size_t{1} << g)) throw PreconditionError("rank table size must be 2^ground_size");
    auto src = std::make_shared<Source>();
    src->table = std::move(table);
    return ExplicitMatroid(g, std::move(src));
  }

  // Lazily memoised rank function (thread-safe cache).
  static ExplicitMatroid from_rank_function(int g, RankFn fn) {
    check_ground(g);
    auto src = std::make_shared<Source>();
    src->fn = std::move(fn);
    return ExplicitMatroid(g, std::move(src));
  }

  // r(X) = max |X ∩ B| over the given bases.
  static ExplicitMatroid from_bases(int g, const std::vector<Subset>& bases, int cap = kDefaultEnumerationCap) {
    check_cap(g, cap);
    if (bases.empty()) throw PreconditionError("a matroid has at least one base");
    const std::size_t total = std::size_t{1} << g;
    std::vector<std::uint8_t> indep(total, 0);
    for (Subset b : bases) {
      if (!subset_of(b, full_subset(g))) throw PreconditionError("base outside the ground set");
      indep[b] = 1;
    }
    for (std::size_t x = total; x-- > 0;)
      if (indep[x])
        for (Subset bits = static_cast<Subset>(x); bits; bits &= bits - 1) indep[x & ~(bits & (~bits + 1))] = 1;
    std::vector<std::uint8_t> table(total, 0);
    for (std::size_t x = 0; x < total; ++x) {
      if (indep[x]) {
        table[x] = static_cast<std::uint8_t>(card(static_cast<Subset>(x)));
        continue;
      }
      int best = 0;
      for (Subset bits = static_cast<Subset>(x); bits; bits &= bits - 1)
        best = std::max<int>(best, table[x & ~(bits & (~bits + 1))]);
      table[x] = static_cast<std::uint8_t>(best);
    }
    return from_table(g, std::move(table));
  }

  static ExplicitMatroid free(int g) {
    return from_rank_function(g, [](Subset x) { return card(x); });
  }
  static ExplicitMatroid uniform(int k, int g) {
    return from_rank_function(g, [k](Subset x) { return std::min(card(x), k); });
  }

  int ground_size() const { return g_; }
  Subset ground() const { return full_subset(g_); }
  bool has_table() const { return !src_->table.empty(); }

  int rank(Subset x) const {
    if (has_table()) return src_->table[x];
    {
      std::shared_lock lock(src_->mu);
      auto it = src_->memo.find(x);
      if (it != src_->memo.end()) return it->second;
    }
    int r = src_->fn(x);
    std::unique_lock lock(src_->mu);
    src_->memo[x] = r;
    return r;
  }
  int rank() const { return rank(ground()); }

  // Dense copy of the rank function.
  ExplicitMatroid materialized(int cap = kDefaultEnumerationCap) const {
    if (has_table()) return *this;
    check_cap(g_, cap);
    const std::size_t total = std::size_t{1} << g_;
    std::vector<std::uint8_t> table(total);
    for (std::size_t x = 0; x < total; ++x) table[x] = static_cast<std::uint8_t>(rank(static_cast<Subset>(x)));
    return from_table(g_, std::move(table));
  }

  const std::vector<std::uint8_t>& table() const {
    if (!has_table()) throw PreconditionError("matroid has no rank table; call materialized()");
    return src_->table;
  }

  bool same_rank_function(const ExplicitMatroid& o, int cap = kDefaultEnumerationCap) const {
    if (g_ != o.g_) return false;
    check_cap(g_, cap);
    for (std::size_t x = 0, total = std::size_t{1} << g_; x < total; ++x)
      if (rank(static_cast<Subset>(x)) != o.rank(static_cast<Subset>(x))) return false;
    return true;
  }

  static void check_cap(int g, int cap) {
    check_ground(g);
    if (g > cap)
      throw CapExceeded("ground size " + std::to_string(g) + " exceeds enumeration cap " + std::to_string(cap));
  }

 private:
  struct Source {
    std::vector<std::uint8_t> table;
    RankFn fn;
    mutable std::shared_mutex mu;
    mutable std::unordered_map<Subset, int> memo;
  };

  ExplicitMatroid(int g, std::shared_ptr<Source> src) : g_(g), src_(std::move(src)) {}

  static void check_ground(int g) {
    if (g < 0 || g > kMaxGround) throw CapExceeded("ground size must lie in [0," + std::to_string(kMaxGround) + "]");
  }

  int g_;
  std::shared_ptr<const Source> src_;
};

// ---------------------------------------------------------------------------
// Oracle-style operations (any ground size)

inline bool is_independent(const ExplicitMatroid& m, Subset x) { return m.rank(x) == card(x); }

inline Subset closure(const ExplicitMatroid& m, Subset x) {
  const int r = m.rank(x);
  Subset cl = x;
  for (int e = 0; e < m.ground_size(); ++e) {
    Subset b = Subset{1} << e;
    if (!(x & b) && m.rank(x | b) == r) cl |= b;
  }
  return cl;
}

inline bool is_flat(const ExplicitMatroid& m, Subset x) {
  const int r = m.rank(x);
  for (int e = 0; e < m.ground_size(); ++e) {
    Subset b = Subset{1} << e;
    if (!(x & b) && m.rank(x | b) == r) return false;
  }
  return true;
}

// X minus the coloops of M|X; one pass suffices since the non-coloops of
// M|X are exactly the union of its circuits.
inline Subset cyc(const ExplicitMatroid& m, Subset x) {
  const int r = m.rank(x);
  Subset out = x;
  for (Subset bits = x; bits; bits &= bits - 1) {
    Subset b = bits & (~bits + 1);
    if (m.rank(x & ~b) < r) out &= ~b;
  }
  return out;
}

inline bool is_cyclic(const ExplicitMatroid& m, Subset x) { return cyc(m, x) == x; }

inline bool is_circuit(const ExplicitMatroid& m, Subset x) {
  if (x == 0) return false;
  const int k = card(x);
  if (m.rank(x) != k - 1) return false;
  for (Subset bits = x; bits; bits &= bits - 1)
    if (m.rank(x & ~(bits & (~bits + 1))) != k - 1) return false;
  return true;
}

inline bool is_modular_pair(const ExplicitMatroid& m, Subset x, Subset y) {
  return m.rank(x) + m.rank(y) == m.rank(x & y) + m.rank(x | y);
}

inline int dual_rank(const ExplicitMatroid& m, Subset x) {
  return card(x) + m.rank(m.ground() & ~x) - m.rank();
}

inline ExplicitMatroid dual(const ExplicitMatroid& m) {
  return ExplicitMatroid::from_rank_function(m.ground_size(), [m](Subset x) { return dual_rank(m, x); });
}

inline ExplicitMatroid truncate(const ExplicitMatroid& m, int k) {
  if (k < 0 || k > m.rank()) throw PreconditionError("truncation rank must lie in [0, r(E)]");
  if (m.has_table()) {
    std::vector<std::uint8_t> t = m.table();
    for (auto& v : t) v = std::min<std::uint8_t>(v, static_cast<std::uint8_t>(k));
    return ExplicitMatroid::from_table(m.ground_size(), std::move(t));
  }
  return ExplicitMatroid::from_rank_function(m.ground_size(), [m, k](Subset x) { return std::min(m.rank(x), k); });
}

// Elements of E \ (delete ∪ contract) in increasing order; element i of
// the minor corresponds to the i-th entry.
inline std::vector<int> minor_elements(int g, Subset del, Subset con) {
  std::vector<int> out;
  for (int e = 0; e < g; ++e)
    if (!((del | con) >> e & 1u)) out.push_back(e);
  return out;
}

// M \ delete / contract, relabelled onto 0..|E|-|delete|-|contract|-1.
// Uses r(F ∪ contract) - r(contract), which is total for dependent contract sets.
inline ExplicitMatroid minor(const ExplicitMatroid& m, Subset del, Subset con) {
  if (del & con) throw PreconditionError("delete and contract sets overlap");
  if (!subset_of(del | con, m.ground())) throw PreconditionError("minor sets outside the ground set");
  auto elems = minor_elements(m.ground_size(), del, con);
  const int rc = m.rank(con);
  auto fn = [m, elems, con, rc](Subset f) {
    Subset lifted = con;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((f >> i) & 1u) lifted |= Subset{1} << elems[i];
    return m.rank(lifted) - rc;
  };
  ExplicitMatroid out = ExplicitMatroid::from_rank_function(static_cast<int>(elems.size()), fn);
  if (m.has_table() && elems.size() <= static_cast<std::size_t>(kDefaultEnumerationCap)) return out.materialized();
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration operations (ground size <= cap)

struct RankAxiomViolation {
  bool ok = true;
  std::string detail;
};

// Local rank axioms on every subset: r(∅)=0, unit increments, and
// r(X+a) + r(X+b) >= r(X+a+b) + r(X). Together these are equivalent to
// the full rank axioms.
inline RankAxiomViolation check_rank_axioms(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  ExplicitMatroid t = m.materialized(cap);
  const int g = t.ground_size();
  if (t.rank(0) != 0) return {false, "r(empty) != 0"};
  for (std::size_t xi = 0, total = std::size_t{1} << g; xi < total; ++xi) {
    Subset x = static_cast<Subset>(xi);
    int rx = t.rank(x);
    for (int a = 0; a < g; ++a) {
      Subset ba = Subset{1} << a;
      if (x & ba) continue;
      int ra = t.rank(x | ba);
      if (ra != rx && ra != rx + 1) return {false, "non-unit increment at " + std::to_string(x) + "+" + std::to_string(a)};
      for (int b = a + 1; b < g; ++b) {
        Subset bb = Subset{1} << b;
        if (x & bb) continue;
        if (ra + t.rank(x | bb) < t.rank(x | ba | bb) + rx)
          return {false, "submodularity fails at " + std::to_string(x) + " with " + std::to_string(a) + "," +
                             std::to_string(b)};
      }
    }
  }
  return {};
}

// All circuits contained in `within`. A set C is a circuit iff r(C) = |C|-1
// and every C - e is independent, so each submask is tested directly.
inline SubsetFamily circuits(const ExplicitMatroid& m, Subset within, int cap = kDefaultEnumerationCap) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  std::vector<Subset> out;
  for (Subset c = within; c; c = (c - 1) & within)
    if (is_circuit(m, c)) out.push_back(c);
  return SubsetFamily(std::move(out));
}
inline SubsetFamily circuits(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  return circuits(m, m.ground(), cap);
}

// cyc(X) for every X, indexed by bitmask.
inline std::vector<Subset> cyc_table(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  const std::size_t total = std::size_t{1} << m.ground_size();
  std::vector<Subset> out(total);
  for (std::size_t x = 0; x < total; ++x) out[x] = cyc(m, static_cast<Subset>(x));
  return out;
}

inline SubsetFamily cyclic_sets(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  auto ct = cyc_table(m, cap);
  std::vector<Subset> out;
  for (std::size_t x = 0; x < ct.size(); ++x)
    if (ct[x] == x) out.push_back(static_cast<Subset>(x));
  return SubsetFamily(std::move(out));
}

inline SubsetFamily flats(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  std::vector<Subset> out;
  for (std::size_t x = 0, total = std::size_t{1} << m.ground_size(); x < total; ++x)
    if (is_flat(m, static_cast<Subset>(x))) out.push_back(static_cast<Subset>(x));
  return SubsetFamily(std::move(out));
}

// CF_M: the non-spanning cyclic flats.
inline SubsetFamily cyclic_flats(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap, bool include_spanning = false) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  const int rE = m.rank();
  std::vector<Subset> out;
  for (std::size_t xi = 0, total = std::size_t{1} << m.ground_size(); xi < total; ++xi) {
    Subset x = static_cast<Subset>(xi);
    if (!include_spanning && m.rank(x) >= rE) continue;
    if (is_cyclic(m, x) && is_flat(m, x)) out.push_back(x);
  }
  return SubsetFamily(std::move(out));
}

// Hyperplanes: flats of rank r(E) - 1.
inline SubsetFamily hyperplanes(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  std::vector<Subset> out;
  const int rE = m.rank();
  for (Subset f : flats(m, cap))
    if (m.rank(f) == rE - 1) out.push_back(f);
  return SubsetFamily(std::move(out));
}

// Classes of "lie on a common circuit inside X"; coloops of M|X are singletons.
inline std::vector<Subset> connected_components(const ExplicitMatroid& m, Subset x, int cap = kDefaultEnumerationCap) {
  const int g = m.ground_size();
  std::vector<int> parent(g);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Subset c : circuits(m, x, cap)) {
    int first = std::countr_zero(c);
    for (Subset bits = c; bits; bits &= bits - 1) {
      int a = find(first), b = find(std::countr_zero(bits));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Subset> classes(g, 0);
  for (Subset bits = x; bits; bits &= bits - 1) {
    int e = std::countr_zero(bits);
    classes[find(e)] |= Subset{1} << e;
  }
  std::vector<Subset> out;
  for (Subset c : classes)
    if (c) out.push_back(c);
  return out;
}

// Verifies the three ear conditions and C_{<=t} = X.
inline bool is_ear_decomposition(const ExplicitMatroid& m, Subset x, const std::vector<Subset>& ears,
                                 int cap = kDefaultEnumerationCap) {
  if (ears.empty()) return false;
  auto all = circuits(m, cap);
  Subset u = 0;
  for (std::size_t i = 0; i < ears.size(); ++i) {
    Subset c = ears[i];
    if (!all.contains(c)) return false;
    if (i > 0) {
      Subset diff = c & ~u;
      if (!(c & u) || !diff) return false;
      for (Subset d : all) {
        if (!(d & u) || !(d & ~u)) continue;
        Subset dd = d & ~u;
        if (dd != diff && subset_of(dd, diff)) return false;
      }
    }
    u |= c;
  }
  return u == x;
}

// Greedy ear decomposition of a connected set X: start from the circuit
// through the smallest element, then repeatedly take a circuit meeting the
// current union whose new part is as small as possible.
inline std::vector<Subset> ear_decomposition(const ExplicitMatroid& m, Subset x, int cap = kDefaultEnumerationCap) {
  if (card(x) < 2) throw PreconditionError("ear decomposition needs |X| >= 2");
  auto comps = connected_components(m, x, cap);
  if (comps.size() != 1) throw PreconditionError("ear decomposition needs a connected set");
  auto cs = circuits(m, x, cap);
  std::vector<Subset> ears;
  Subset low = x & (~x + 1);
  Subset first = 0;
  for (Subset c : cs)
    if ((c & low) && (first == 0 || card(c) < card(first))) first = c;
  ears.push_back(first);
  Subset u = first;
  while (u != x) {
    Subset best = 0;
    int best_new = 1 << 30;
    for (Subset c : cs) {
      if (!(c & u) || !(c & ~u)) continue;
      int fresh = card(c & ~u);
      if (fresh < best_new) {
        best = c;
        best_new = fresh;
      }
    }
    if (!best) throw PreconditionError("ear decomposition stalled; set is not connected");
    ears.push_back(best);
    u |= best;
  }
  return ears;
}

}  // namespace cofmat
