#pragma once

// Verification checks over random and exhaustive instances. Each check
// returns a CheckResult with a case count and the first failure seen; the
// CLI `verify` command groups them into suites and the acceptance binary
// runs them at the required sizes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cofmat/cover.hpp"
#include "cofmat/errors.hpp"
#include "cofmat/erection.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/k5_sequence.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/oracle.hpp"
#include "cofmat/standard.hpp"

namespace cofmat {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a summary
  double seconds = 0;
  nlohmann::json data = nlohmann::json::object();

  void fail(const std::string& why) {
    passed = false;
    if (failures++ == 0) detail = why;
  }
  void require_cases(std::size_t at_least) {
    if (cases < at_least) fail("only " + std::to_string(cases) + " cases, need " + std::to_string(at_least));
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"name", name}, {"passed", passed}, {"cases", cases}, {"failures", failures}};
    if (!detail.empty()) j["detail"] = detail;
    if (!data.empty()) j["data"] = data;
    return j;
  }
};

// A cyclic flat found while running a check, kept for the simplicial-vertex check.
struct FlatSample {
  EdgeSet edges;
  std::string source;
};

struct VerifyConfig {
  OracleOptions oracle;
  std::uint64_t rng_seed = 20240601;
};

namespace detail {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const WitnessMismatch& e) {
    r.fail(std::string(e.what()) + " " + e.diagnostic);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline EdgeSet random_edges(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet f(n);
  for (int i = 0; i < num_edges(n); ++i)
    if (coin(rng)) f.insert(edge_at(n, i));
  return f;
}

inline EdgeSet random_subset_of(const EdgeSet& f, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet out(f.ambient());
  for (const Edge& e : f.edges())
    if (coin(rng)) out.insert(e);
  return out;
}

inline VertexSet random_vertices(const VertexSet& pool, int k, std::mt19937_64& rng) {
  auto vs = pool.members();
  std::shuffle(vs.begin(), vs.end(), rng);
  VertexSet s;
  for (int i = 0; i < k && i < static_cast<int>(vs.size()); ++i) s.insert(vs[i]);
  return s;
}

inline EdgeSet random_base(const EdgeSet& f, const CofactorOracle& oracle, std::mt19937_64& rng) {
  auto order = f.edges();
  std::shuffle(order.begin(), order.end(), rng);
  return oracle.greedy_base(f, order);
}

inline int min_degree_on(const EdgeSet& b, const VertexSet& vs) {
  int best = 1 << 20;
  for (VertexId v : vs.members()) best = std::min(best, neighbor_edges(b, v).degree);
  return best;
}

inline std::string edges_str(const EdgeSet& f) { return edges_json(f).dump(); }

// m vertex sets of size 5..7 in K_n; after the first, most members share a
// pair with an earlier member so that hinges occur.
inline std::vector<VertexSet> hinged_family(int n, int m, std::mt19937_64& rng) {
  std::vector<VertexSet> fam;
  const VertexSet all = VertexSet::range(n);
  std::uniform_int_distribution<int> size(5, std::min(n, 7));
  for (int j = 0; j < m; ++j) {
    int k = size(rng);
    if (fam.empty() || std::bernoulli_distribution(0.25)(rng)) {
      fam.push_back(random_vertices(all, k, rng));
      continue;
    }
    const VertexSet& prev = fam[std::uniform_int_distribution<std::size_t>(0, fam.size() - 1)(rng)];
    VertexSet x = random_vertices(prev, 2, rng);
    x = x | random_vertices(all - prev, k - 2, rng);
    if (x.size() < 5) x = x | random_vertices(all - x, 5 - x.size(), rng);
    fam.push_back(x);
  }
  return fam;
}

}  // namespace detail

// rank(E(K_n)) = 3n - 6 in the s = 2 cofactor matroid.
inline CheckResult check_complete_ranks(int lo, int hi, const VerifyConfig& cfg = {}) {
  return detail::timed("complete-graph-ranks", [&](CheckResult& r) {
    for (int n = lo; n <= hi; ++n) {
      auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
      int got = o.rank(EdgeSet::complete(n));
      ++r.cases;
      r.data["rank_K" + std::to_string(n)] = got;
      if (got != 3 * n - 6) r.fail("rank(K_" + std::to_string(n) + ") = " + std::to_string(got));
    }
  });
}

// Every K_5 copy in K_n is a circuit: dependent, each 9-edge subset independent.
inline CheckResult check_k5_circuits(int n, const VerifyConfig& cfg = {}) {
  return detail::timed("k5-circuits", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    for (const VertexSet& c : vertex_subsets(VertexSet::range(n), 5)) {
      EdgeSet k = complete_edges(n, c);
      ++r.cases;
      if (o.is_independent(k)) r.fail("K5 on " + nlohmann::json(c.members()).dump() + " is independent");
      for (const Edge& e : k.edges())
        if (!o.is_independent(k.without(e)))
          r.fail("K5 on " + nlohmann::json(c.members()).dump() + " minus " + to_string(e) + " is dependent");
    }
  });
}

// For every F ⊆ E(K_n): min proper-K_5-sequence value over all vertices equals the rank.
// Collects the non-empty cyclic flats of the oracle matroid into `flats` if given.
inline CheckResult check_sequence_sweep(int n, const VerifyConfig& cfg = {}, std::vector<FlatSample>* flats = nullptr) {
  return detail::timed("k5-sequence-sweep", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    auto table = o.rank_table();
    SequenceSearchOptions opts;
    opts.pool = VertexSet::range(n);
    std::size_t nodes = 0;
    for (std::size_t x = 0; x < table.size(); ++x) {
      EdgeSet f = to_edge_set(n, static_cast<Subset>(x));
      auto res = min_sequence_value(f, opts);
      nodes += res.nodes;
      ++r.cases;
      if (res.value != table[x])
        r.fail("F=" + detail::edges_str(f) + ": sequence value " + std::to_string(res.value) + ", rank " +
               std::to_string(table[x]));
    }
    r.data["search_nodes"] = nodes;
    if (flats) {
      auto m = ExplicitMatroid::from_table(num_edges(n), table);
      std::size_t k = 0;
      for (Subset x : cyclic_flats(m, kDefaultEnumerationCap, true))
        if (x) {
          flats->push_back({to_edge_set(n, x), "sweep"});
          ++k;
        }
      r.data["cyclic_flats"] = k;
    }
  });
}

struct ElevationOutcome {
  CheckResult elevation;
  CheckResult cover;
};

// R_6 built combinatorially, elevated freely; the chain must have two
// non-trivial steps and end at the C_2^1 matroid, and every cyclic flat of
// the elevation must be a union of K_5 copies.
inline ElevationOutcome check_elevation(int n, const VerifyConfig& cfg = {}, std::vector<FlatSample>* flats = nullptr) {
  ElevationOutcome out;
  ErectionChain chain;
  ExplicitMatroid target;
  out.elevation = detail::timed("free-elevation", [&](CheckResult& r) {
    ExplicitMatroid r0 = k5_paving_matroid(n);
    target = oracle_matroid(CofactorOracle::cofactor(n, 2, cfg.oracle));
    if (!r0.same_rank_function(truncate(target, 10))) r.fail("paving matroid differs from the rank-10 truncation");
    chain = free_elevation(r0);
    r.cases = 1;
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
      const auto& s = chain.steps[i];
      steps.push_back({{"rank", chain.matroids[i].rank()},
                       {"cyclic_flats", s.cyclic_flats},
                       {"closure", s.closure.size()},
                       {"cyclic_sets", s.cyclic_sets},
                       {"trivial", s.trivial}});
    }
    r.data["steps"] = steps;
    r.data["nontrivial_steps"] = chain.nontrivial_steps();
    if (chain.nontrivial_steps() != 2)
      r.fail("expected 2 non-trivial erections, got " + std::to_string(chain.nontrivial_steps()));
    if (chain.matroids.size() > 1 && !chain.matroids[1].same_rank_function(truncate(target, std::min(11, target.rank()))))
      r.fail("first erection differs from the rank-11 truncation");
    const auto& top = chain.elevation();
    std::size_t mismatches = 0;
    for (std::size_t x = 0, total = std::size_t{1} << top.ground_size(); x < total; ++x)
      if (top.rank(static_cast<Subset>(x)) != target.rank(static_cast<Subset>(x))) ++mismatches;
    r.data["table_mismatches"] = mismatches;
    if (mismatches) r.fail(std::to_string(mismatches) + " subsets where the elevation differs from the oracle");
  });
  out.cover = detail::timed("elevation-cyclic-flat-cover", [&](CheckResult& r) {
    if (chain.matroids.empty()) throw PreconditionError("elevation did not complete");
    SubsetFamily k5(clique_subsets(n, 5));
    auto cf = cyclic_flats(chain.elevation(), kDefaultEnumerationCap, true);
    r.cases = cf.size();
    CoverCheck c = check_cyclic_flat_cover(chain, k5);
    if (!c.holds) r.fail("cyclic flat " + detail::edges_str(to_edge_set(n, c.witness)) + " is not a union of K5s");
    if (flats)
      for (Subset x : cf)
        if (x) flats->push_back({to_edge_set(n, x), "elevation"});
  });
  return out;
}

// Dress formula on closures of random F ⊆ E(K_n), with the exhaustive
// minimum over small shellable covers compared whenever X* has at most
// `brute_max` members (0 disables).
inline CheckResult check_dress_random(int n, std::size_t count, const VerifyConfig& cfg = {},
                                      std::vector<FlatSample>* flats = nullptr, std::size_t brute_max = 0) {
  return detail::timed("dress-formula", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> density(0.2, 0.85);
    std::size_t brute = 0, nontrivial = 0;
    for (std::size_t i = 0; i < count; ++i) {
      EdgeSet f = detail::random_edges(n, density(rng), rng);
      EdgeSet g = o.closure(f);
      DressResult d = dress_rank(g, o);
      ++r.cases;
      if (!d.cliques.members.empty()) ++nontrivial;
      if (brute_max && d.cliques.size() <= brute_max) {
        auto best = min_shellable_cover_value(g, brute_max);
        ++brute;
        if (best.value != d.rank)
          r.fail("G=" + detail::edges_str(g) + ": cover minimum " + std::to_string(best.value) + ", rank " +
                 std::to_string(d.rank));
      }
      if (flats && !g.empty() && is_cyclic(g, o)) flats->push_back({g, "dress"});
    }
    r.data["with_cliques"] = nontrivial;
    r.data["brute_forced"] = brute;
  });
}

// Dress formula on closures of unions of hinged cliques in K_n, where the
// maximal-clique family has several members.
inline CheckResult check_dress_structured(int n, std::size_t count, const VerifyConfig& cfg = {},
                                          std::vector<FlatSample>* flats = nullptr) {
  return detail::timed("dress-formula-hinged", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    std::mt19937_64 rng(cfg.rng_seed + 7);
    std::size_t multi = 0, hinged = 0;
    for (std::size_t i = 0; i < count; ++i) {
      EdgeSet f(n);
      for (const VertexSet& x : detail::hinged_family(n, std::uniform_int_distribution<int>(2, 4)(rng), rng))
        f = f | complete_edges(n, x);
      f = f | detail::random_edges(n, 0.05, rng);
      EdgeSet g = o.closure(f);
      DressResult d = dress_rank(g, o);
      ++r.cases;
      multi += d.cliques.size() >= 2;
      hinged += d.hinge_table.size() > 0;
      if (flats && is_cyclic(g, o)) flats->push_back({g, "dress-hinged"});
    }
    r.data["several_cliques"] = multi;
    r.data["with_hinges"] = hinged;
  });
}

// rank(F) <= val_D(X) for random M-degenerate covers X of random F.
inline CheckResult check_cover_soundness(std::size_t count, const VerifyConfig& cfg = {}) {
  return detail::timed("cover-upper-bound", [&](CheckResult& r) {
    std::mt19937_64 rng(cfg.rng_seed + 1);
    std::vector<CofactorOracle> oracles;
    for (int n = 6; n <= 8; ++n) oracles.push_back(CofactorOracle::cofactor(n, 2, cfg.oracle));
    std::size_t attempts = 0, tight = 0, rejected = 0, hinged = 0;
    while (r.cases < count && attempts < 50 * count) {
      ++attempts;
      const auto& o = oracles[std::uniform_int_distribution<int>(0, 2)(rng)];
      const int n = o.n();
      CliqueCover cover{n, detail::hinged_family(n, std::uniform_int_distribution<int>(1, 4)(rng), rng)};
      EdgeSet f = detail::random_subset_of(cover.covered_edges(), 0.85, rng);
      if (!is_M_degenerate(cover, o)) {
        ++rejected;
        continue;
      }
      ++r.cases;
      hinged += hinges(cover.members).size() > 0;
      int v = cover_upper_bound(f, cover, o);
      if (o.rank(f) == v) ++tight;
    }
    r.data["attempts"] = attempts;
    r.data["not_degenerate"] = rejected;
    r.data["with_hinges"] = hinged;
    r.data["tight"] = tight;
    r.require_cases(count);
  });
}

// K_n minus random k-edge sets is rigid.
inline CheckResult check_connectivity(int n, int k, std::size_t count, const VerifyConfig& cfg = {}) {
  return detail::timed("near-complete-rigidity", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    std::mt19937_64 rng(cfg.rng_seed + 2);
    std::vector<int> idx(num_edges(n));
    for (int i = 0; i < num_edges(n); ++i) idx[i] = i;
    for (std::size_t t = 0; t < count; ++t) {
      std::shuffle(idx.begin(), idx.end(), rng);
      EdgeSet g = EdgeSet::complete(n);
      for (int j = 0; j < k; ++j) g.erase(edge_at(n, idx[j]));
      ++r.cases;
      int got = o.rank(g);
      if (got != 3 * n - 6) r.fail("K" + std::to_string(n) + " minus " + detail::edges_str(EdgeSet::complete(n) - g) +
                                   " has rank " + std::to_string(got));
    }
  });
}

// 0-extensions, 1-extensions and X-replacements keep independent sets independent.
inline CheckResult check_extensions(int n, std::size_t count, const VerifyConfig& cfg = {}) {
  return detail::timed("extensions", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    std::mt19937_64 rng(cfg.rng_seed + 3);
    const VertexId fresh = n - 1;
    const VertexSet old = VertexSet::range(n - 1);
    std::size_t zero = 0, one = 0, x = 0;
    std::size_t sets = 0;
    while (sets < count) {
      EdgeSet pool(n);
      for (const Edge& e : detail::random_edges(n - 1, 0.7, rng).edges()) pool.insert(e);
      EdgeSet f = detail::random_base(pool, o, rng);
      if (f.size() < 2) continue;
      ++sets;
      auto check = [&](ExtensionKind kind, const VertexSet& attach, std::vector<Edge> del, std::size_t& tally) {
        auto res = zero_one_x_extension(f, kind, fresh, attach, del);
        ++tally;
        ++r.cases;
        if (!o.is_independent(res.edges))
          r.fail("extension of kind " + std::to_string(static_cast<int>(kind)) + " of " + detail::edges_str(f) +
                 " is dependent");
      };
      check(ExtensionKind::zero_ext, detail::random_vertices(old, 3, rng), {}, zero);
      auto es = f.edges();
      Edge e = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
      VertexSet a1{e.u, e.v};
      a1 = a1 | detail::random_vertices(old - a1, 2, rng);
      check(ExtensionKind::one_ext, a1, {e}, one);
      std::vector<std::pair<Edge, Edge>> disjoint;
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (!es[i].shares_endpoint(es[j])) disjoint.push_back({es[i], es[j]});
      if (!disjoint.empty()) {
        auto [e1, e2] = disjoint[std::uniform_int_distribution<std::size_t>(0, disjoint.size() - 1)(rng)];
        VertexSet a2{e1.u, e1.v, e2.u, e2.v};
        a2 = a2 | detail::random_vertices(old - a2, 1, rng);
        check(ExtensionKind::x_replacement, a2, {e1, e2}, x);
      }
    }
    r.data["independent_sets"] = sets;
    r.data["zero_extensions"] = zero;
    r.data["one_extensions"] = one;
    r.data["x_replacements"] = x;
    if (x < count) r.fail("only " + std::to_string(x) + " X-replacements exercised");
  });
}

// Named small graphs plus seeded random graphs on 2..10 vertices.
inline std::vector<EdgeSet> standard_corpus(std::uint64_t seed = 7, std::size_t random_count = 300) {
  std::vector<EdgeSet> out;
  for (int n = 2; n <= 10; ++n) {
    out.push_back(EdgeSet::complete(n));
    EdgeSet cyc(n), path(n), star_g(n), wheel(n);
    for (int i = 0; i + 1 < n; ++i) path.insert(Edge(i, i + 1));
    for (int i = 1; i < n; ++i) star_g.insert(Edge(0, i));
    out.push_back(path);
    out.push_back(star_g);
    if (n >= 3) {
      cyc = path.with(Edge(0, n - 1));
      out.push_back(cyc);
    }
    if (n >= 4) {
      for (int i = 1; i < n; ++i) {
        wheel.insert(Edge(0, i));
        wheel.insert(Edge(i, i + 1 < n ? i + 1 : 1));
      }
      out.push_back(wheel);
    }
    out.push_back(EdgeSet(n));
  }
  EdgeSet petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.insert(Edge(i, (i + 1) % 5));
    petersen.insert(Edge(i, i + 5));
    petersen.insert(Edge(5 + i, 5 + (i + 2) % 5));
  }
  out.push_back(petersen);
  EdgeSet k33(6), banana(8);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.insert(Edge(a, b));
  out.push_back(k33);
  banana = complete_edges(8, {0, 1, 2, 3, 4}) | complete_edges(8, {0, 1, 5, 6, 7});
  out.push_back(banana);
  out.push_back(banana.without(Edge(0, 1)));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    out.push_back(detail::random_edges(n, p, rng));
  }
  return out;
}

// s = 0 against the graphic rank on the corpus; s = 1 against 2-dimensional
// rigidity on random graphs.
inline CheckResult check_cross_oracle(const std::vector<EdgeSet>& corpus, std::size_t rigidity_count,
                                      const VerifyConfig& cfg = {}) {
  return detail::timed("cross-oracle", [&](CheckResult& r) {
    std::size_t graphic = 0, planar = 0;
    for (const EdgeSet& g : corpus) {
      if (g.ambient() > 10) continue;
      auto o = CofactorOracle::cofactor(g.ambient(), 0, cfg.oracle);
      ++r.cases;
      ++graphic;
      if (o.rank(g) != graphic_rank(g))
        r.fail("s=0 rank " + std::to_string(o.rank(g)) + " vs graphic " + std::to_string(graphic_rank(g)) + " on " +
               detail::edges_str(g));
    }
    std::mt19937_64 rng(cfg.rng_seed + 4);
    for (std::size_t i = 0; i < rigidity_count; ++i) {
      int n = std::uniform_int_distribution<int>(3, 10)(rng);
      EdgeSet g = detail::random_edges(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
      auto c1 = CofactorOracle::cofactor(n, 1, cfg.oracle);
      auto r2 = CofactorOracle::rigidity(n, 2, cfg.oracle);
      ++r.cases;
      ++planar;
      if (c1.rank(g) != r2.rank(g))
        r.fail("s=1 rank " + std::to_string(c1.rank(g)) + " vs 2-rigidity " + std::to_string(r2.rank(g)) + " on " +
               detail::edges_str(g));
    }
    r.data["graphic_cases"] = graphic;
    r.data["rigidity_cases"] = planar;
  });
}

// find_simplicial_base_vertex succeeds on each sample, and its output checks out.
inline CheckResult check_simplicial(const std::vector<FlatSample>& flats, const VerifyConfig& cfg = {}) {
  return detail::timed("simplicial-vertex", [&](CheckResult& r) {
    std::vector<std::unique_ptr<CofactorOracle>> oracles(kMaxVertices + 1);
    nlohmann::json by_source = nlohmann::json::object();
    for (const FlatSample& s : flats) {
      const int n = s.edges.ambient();
      if (!oracles[n]) oracles[n] = std::make_unique<CofactorOracle>(CofactorOracle::cofactor(n, 2, cfg.oracle));
      const auto& o = *oracles[n];
      ++r.cases;
      by_source[s.source] = by_source.value(s.source, 0) + 1;
      try {
        SimplicialVertex sv = find_simplicial_base_vertex(s.edges, o);
        Neighborhood nb = neighbor_edges(s.edges, sv.vertex);
        bool ok = complete_edges(n, nb.neighbors).subset_of(s.edges) && sv.base.subset_of(s.edges) &&
                  o.is_independent(sv.base) && sv.base.size() == o.rank(s.edges) &&
                  neighbor_edges(sv.base, sv.vertex).degree == 3;
        if (!ok) r.fail("bad simplicial witness on " + detail::edges_str(s.edges));
      } catch (const std::exception& e) {
        r.fail(std::string(e.what()) + " on " + detail::edges_str(s.edges));
      }
    }
    r.data["by_source"] = by_source;
  });
}

// Random non-empty cyclic sets X: every base has minimum degree >= 3 and
// some base has minimum degree <= 4. Exact via r(X) - r(X - v), which is
// the least degree of v over bases of X; sampled bases are checked too.
inline CheckResult check_degree_bounds(std::size_t count, const VerifyConfig& cfg = {}) {
  return detail::timed("cyclic-degree-bounds", [&](CheckResult& r) {
    std::mt19937_64 rng(cfg.rng_seed + 5);
    std::vector<CofactorOracle> oracles;
    for (int n = 5; n <= 7; ++n) oracles.push_back(CofactorOracle::cofactor(n, 2, cfg.oracle));
    std::size_t attempts = 0;
    while (r.cases < count && attempts < 100 * count) {
      ++attempts;
      const auto& o = oracles[std::uniform_int_distribution<int>(0, 2)(rng)];
      const int n = o.n();
      EdgeSet x(n);
      if (attempts % 2) {
        x = cyclic_part(detail::random_edges(n, std::uniform_real_distribution<double>(0.5, 1.0)(rng), rng), o);
      } else {
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int j = 0; j < m; ++j) x = x | complete_edges(n, detail::random_vertices(VertexSet::range(n), 5, rng));
      }
      if (x.empty()) continue;
      ++r.cases;
      const int rx = o.rank(x);
      const VertexSet vs = vertex_support(x);
      int lo = 1 << 20;
      for (VertexId v : vs.members()) lo = std::min(lo, rx - o.rank(x - star(x, v)));
      bool ok = lo >= 3 && lo <= 4;
      for (int t = 0; t < 4 && ok; ++t) ok = detail::min_degree_on(detail::random_base(x, o, rng), vs) >= 3;
      if (!ok) r.fail("degree bounds fail on " + detail::edges_str(x) + " (least base degree " + std::to_string(lo) + ")");
    }
    r.data["attempts"] = attempts;
    r.require_cases(count);
  });
}

// Graver's axioms A1 and A2 (d = 3) on random pairs, and submodularity on random triples.
inline CheckResult check_graver_axioms(int n, std::size_t count, const VerifyConfig& cfg = {}) {
  return detail::timed("graver-axioms", [&](CheckResult& r) {
    auto o = CofactorOracle::cofactor(n, 2, cfg.oracle);
    std::mt19937_64 rng(cfg.rng_seed + 6);
    std::uniform_int_distribution<int> size(4, n - 1);
    std::size_t a1 = 0, a2 = 0, sub = 0;
    while (a2 < count) {
      VertexSet x1 = detail::random_vertices(VertexSet::range(n), size(rng), rng);
      VertexSet x2 = detail::random_vertices(VertexSet::range(n), size(rng), rng);
      EdgeSet e1 = complete_edges(n, x1), e2 = complete_edges(n, x2);
      EdgeSet cl = o.closure(e1 | e2);
      ++r.cases;
      if ((x1 & x2).size() >= 3) {
        ++a2;
        if (cl != complete_edges(n, x1 | x2)) r.fail("A2 fails for " + nlohmann::json(x1.members()).dump() + ", " +
                                                    nlohmann::json(x2.members()).dump());
      } else {
        ++a1;
        if (!cl.subset_of(e1 | e2)) r.fail("A1 fails for " + nlohmann::json(x1.members()).dump() + ", " +
                                          nlohmann::json(x2.members()).dump());
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      EdgeSet x = detail::random_edges(n, 0.4, rng), y = detail::random_edges(n, 0.4, rng);
      ++r.cases;
      ++sub;
      if (o.rank(x) + o.rank(y) < o.rank(x | y) + o.rank(x & y)) r.fail("submodularity fails");
      if (o.rank(x & y) > o.rank(x)) r.fail("monotonicity fails");
    }
    r.data["a1"] = a1;
    r.data["a2"] = a2;
    r.data["submodular"] = sub;
  });
}

}  // namespace cofmat
