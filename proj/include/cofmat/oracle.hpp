#pragma once

// Generic cofactor and rigidity matroids on E(K_n), evaluated over GF(p)
// at seeded random configurations.
//
// A rank query is answered at each configuration independently; the
// reported rank is the maximum, and the answer is refused when fewer
// than a strict majority of configurations attain that maximum.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cofmat/errors.hpp"
#include "cofmat/field.hpp"
#include "cofmat/graph.hpp"

namespace cofmat {

struct GenericConfiguration {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<FieldElement, FieldElement>> points;
  // third coordinate, drawn from the same stream after the 2n plane values
  std::vector<FieldElement> z;

  static GenericConfiguration draw(int n, std::uint64_t seed, const PrimeField& field) {
    GenericConfiguration c;
    c.n = n;
    c.seed = seed;
    if (n == 0) return c;
    auto flat = random_field_elements(3 * static_cast<std::size_t>(n), seed, field);
    c.points.resize(n);
    c.z.resize(n);
    for (int i = 0; i < n; ++i) {
      c.points[i] = {flat[2 * i], flat[2 * i + 1]};
      c.z[i] = flat[2 * static_cast<std::size_t>(n) + i];
    }
    return c;
  }
};

// Row of C_s^{s-1}(K_n, p) for e = v_i v_j, i < j: D_ij in block i and
// -D_ij in block j, where D_ij = (a^s, a^{s-1} b, ..., b^s), a = x_i - x_j,
// b = y_i - y_j.
inline std::vector<std::uint64_t> cofactor_row(const Edge& e, const GenericConfiguration& cfg, int s,
                                               const PrimeField& field) {
  if (s < 0) throw PreconditionError("spline degree s must be >= 0");
  const int w = s + 1;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(w) * cfg.n, 0);
  std::uint64_t a = field.sub(cfg.points[e.u].first.residue, cfg.points[e.v].first.residue);
  std::uint64_t b = field.sub(cfg.points[e.u].second.residue, cfg.points[e.v].second.residue);
  for (int k = 0; k <= s; ++k) {
    std::uint64_t d = field.mul(field.pow(a, s - k), field.pow(b, k));
    row[static_cast<std::size_t>(e.u) * w + k] = d;
    row[static_cast<std::size_t>(e.v) * w + k] = field.neg(d);
  }
  return row;
}

// Row of the rigidity matrix R(K_n, p): p(u)-p(v) in block u, p(v)-p(u) in block v.
inline std::vector<std::uint64_t> rigidity_row(const Edge& e, const GenericConfiguration& cfg, int d,
                                               const PrimeField& field) {
  if (d < 1 || d > 3) throw PreconditionError("rigidity dimension must be 1, 2 or 3");
  std::vector<std::uint64_t> row(static_cast<std::size_t>(d) * cfg.n, 0);
  auto coord = [&](VertexId v, int k) {
    if (k == 0) return cfg.points[v].first.residue;
    if (k == 1) return cfg.points[v].second.residue;
    return cfg.z[v].residue;
  };
  for (int k = 0; k < d; ++k) {
    std::uint64_t diff = field.sub(coord(e.u, k), coord(e.v, k));
    row[static_cast<std::size_t>(e.u) * d + k] = diff;
    row[static_cast<std::size_t>(e.v) * d + k] = field.neg(diff);
  }
  return row;
}

struct OracleOptions {
  std::uint64_t modulus = kMersenne61;
  std::vector<std::uint64_t> seeds = {1, 2, 3};
};

enum class MatrixKind { cofactor, rigidity };

class CofactorOracle {
 public:
  // Row matroid of C_s^{s-1}(K_n, p).
  static CofactorOracle cofactor(int n, int s = 2, OracleOptions opts = {}) {
    return CofactorOracle(MatrixKind::cofactor, n, s, std::move(opts));
  }
  // Row matroid of the d-dimensional rigidity matrix R(K_n, p).
  static CofactorOracle rigidity(int n, int d, OracleOptions opts = {}) {
    return CofactorOracle(MatrixKind::rigidity, n, d, std::move(opts));
  }

  int n() const { return n_; }
  MatrixKind kind() const { return kind_; }
  // s for cofactor matrices, d for rigidity matrices
  int parameter() const { return param_; }
  const std::vector<std::uint64_t>& seeds() const { return state_->seeds; }
  std::uint64_t modulus() const { return state_->field.modulus(); }
  const PrimeField& field() const { return state_->field; }
  int width() const { return state_->width; }
  const GenericConfiguration& configuration(std::size_t k) const { return state_->configs.at(k); }

  std::span<const std::uint64_t> row(std::size_t seed_index, int edge_index) const {
    const auto& rows = state_->rows[seed_index];
    return {rows.data() + static_cast<std::size_t>(edge_index) * state_->width,
            static_cast<std::size_t>(state_->width)};
  }

  int rank(const EdgeSet& f) const {
    check_ambient(f);
    {
      std::shared_lock lock(state_->mu);
      auto it = state_->memo.find(f.mask());
      if (it != state_->memo.end()) return it->second;
    }
    std::vector<int> per_seed(seeds().size());
    auto idx = f.indices();
    for (std::size_t k = 0; k < per_seed.size(); ++k) {
      EchelonBasis basis(state_->field, width());
      for (int i : idx) basis.insert(row(k, i));
      per_seed[k] = basis.rank();
    }
    int r = aggregate(per_seed, f.size());
    std::unique_lock lock(state_->mu);
    state_->memo[f.mask()] = r;
    return r;
  }

  bool is_independent(const EdgeSet& f) const { return rank(f) == f.size(); }

  int full_rank() const { return rank(EdgeSet::complete(n_)); }

  // true iff F spans the matroid (for s = 2, n >= 5: rank 3n - 6)
  bool is_rigid(const EdgeSet& f) const { return rank(f) == full_rank(); }

  // cl(F) via single-row probes against an echelon form of F's rows per seed.
  EdgeSet closure(const EdgeSet& f) const {
    check_ambient(f);
    const std::size_t k = seeds().size();
    std::vector<EchelonBasis> bases;
    std::vector<int> base_rank(k);
    auto idx = f.indices();
    for (std::size_t s = 0; s < k; ++s) {
      bases.emplace_back(state_->field, width());
      for (int i : idx) bases[s].insert(row(s, i));
      base_rank[s] = bases[s].rank();
    }
    int rf = aggregate(base_rank, f.size());
    EdgeSet cl = f;
    std::vector<int> probe(k);
    for (int e = 0, m = num_edges(n_); e < m; ++e) {
      if (f.mask().test(e)) continue;
      for (std::size_t s = 0; s < k; ++s) probe[s] = base_rank[s] + (bases[s].is_independent(row(s, e)) ? 1 : 0);
      if (aggregate(probe, f.size() + 1) == rf) cl.insert(edge_at(n_, e));
    }
    return cl;
  }

  bool is_flat(const EdgeSet& f) const { return closure(f) == f; }

  // Greedy maximal independent subset of F, scanning `order` (edges outside F are skipped).
  EdgeSet greedy_base(const EdgeSet& f, const std::vector<Edge>& order) const {
    EdgeSet b(n_);
    for (const Edge& e : order) {
      if (!f.contains(e) || b.contains(e)) continue;
      EdgeSet cand = b.with(e);
      if (is_independent(cand)) b = cand;
    }
    return b;
  }
  EdgeSet greedy_base(const EdgeSet& f) const { return greedy_base(f, f.edges()); }

  // Unique circuit in B + e through e; B independent, B + e dependent.
  EdgeSet fundamental_circuit(const EdgeSet& b, const Edge& e) const {
    if (!is_independent(b)) throw PreconditionError("fundamental_circuit: B is not independent");
    EdgeSet c = b.with(e);
    if (is_independent(c)) throw PreconditionError("no circuit: B + e is independent");
    for (const Edge& x : b.edges()) {
      EdgeSet smaller = c.without(x);
      if (!is_independent(smaller)) c = smaller;
    }
    return c;
  }

  // Rank of every subset of E(K_n), indexed by edge bitmask. Requires
  // C(n,2) <= 22. Built by a depth-first sweep that extends one echelon
  // form per tree node.
  std::vector<std::uint8_t> rank_table() const {
    const int m = num_edges(n_);
    if (m > 22) throw CapExceeded("rank_table needs C(n,2) <= 22, got " + std::to_string(m));
    const std::size_t total = std::size_t{1} << m;
    const std::size_t k = seeds().size();
    std::vector<std::vector<std::uint8_t>> per(k, std::vector<std::uint8_t>(total, 0));
    for (std::size_t s = 0; s < k; ++s) {
      EchelonBasis root(state_->field, width());
      sweep(s, m, 0, 0, root, per[s]);
    }
    std::vector<std::uint8_t> table(total);
    std::vector<int> vals(k);
    for (std::size_t x = 0; x < total; ++x) {
      for (std::size_t s = 0; s < k; ++s) vals[s] = per[s][x];
      table[x] = static_cast<std::uint8_t>(aggregate(vals, std::popcount(x)));
    }
    return table;
  }

  std::string describe() const {
    std::ostringstream os;
    os << (kind_ == MatrixKind::cofactor ? "cofactor" : "rigidity") << " n=" << n_
       << (kind_ == MatrixKind::cofactor ? " s=" : " d=") << param_ << " seeds=";
    for (std::size_t i = 0; i < seeds().size(); ++i) os << (i ? "," : "") << seeds()[i];
    os << " modulus=" << modulus();
    return os.str();
  }

 private:
  struct State {
    PrimeField field;
    std::vector<std::uint64_t> seeds;
    int width = 0;
    std::vector<GenericConfiguration> configs;
    std::vector<std::vector<std::uint64_t>> rows;  // per seed, C(n,2) rows of `width`
    mutable std::shared_mutex mu;
    mutable std::unordered_map<EdgeMask, int> memo;
    explicit State(std::uint64_t p) : field(p) {}
  };

  CofactorOracle(MatrixKind kind, int n, int param, OracleOptions opts) : kind_(kind), n_(n), param_(param) {
    if (n < 0 || n > kMaxVertices) throw CapExceeded("ambient n outside [0,16]");
    if (opts.seeds.empty()) throw PreconditionError("at least one seed is required");
    if (kind == MatrixKind::cofactor && param < 0) throw PreconditionError("s must be >= 0");
    if (kind == MatrixKind::rigidity && (param < 1 || param > 3))
      throw PreconditionError("rigidity dimension must be 1, 2 or 3");
    state_ = std::make_shared<State>(opts.modulus);
    state_->seeds = std::move(opts.seeds);
    state_->width = (kind == MatrixKind::cofactor ? param + 1 : param) * n;
    const int m = num_edges(n);
    for (std::uint64_t seed : state_->seeds) {
      state_->configs.push_back(GenericConfiguration::draw(n, seed, state_->field));
      const auto& cfg = state_->configs.back();
      std::vector<std::uint64_t> rows;
      rows.reserve(static_cast<std::size_t>(m) * state_->width);
      for (int i = 0; i < m; ++i) {
        Edge e = edge_at(n, i);
        auto r = kind == MatrixKind::cofactor ? cofactor_row(e, cfg, param, state_->field)
                                              : rigidity_row(e, cfg, param, state_->field);
        rows.insert(rows.end(), r.begin(), r.end());
      }
      state_->rows.push_back(std::move(rows));
    }
  }

  void check_ambient(const EdgeSet& f) const {
    if (f.ambient() != n_)
      throw AmbientMismatch("edge set over K_" + std::to_string(f.ambient()) + " queried against oracle on K_" +
                            std::to_string(n_));
  }

  int aggregate(const std::vector<int>& per_seed, int set_size) const {
    int best = *std::max_element(per_seed.begin(), per_seed.end());
    auto hits = std::count(per_seed.begin(), per_seed.end(), best);
    if (2 * static_cast<std::size_t>(hits) <= per_seed.size()) {
      std::ostringstream os;
      os << "seed disagreement on a " << set_size << "-edge set (" << describe() << "): ranks";
      for (int r : per_seed) os << ' ' << r;
      throw SeedDisagreement(os.str());
    }
    return best;
  }

  void sweep(std::size_t s, int m, int start, std::uint32_t mask, const EchelonBasis& basis,
             std::vector<std::uint8_t>& out) const {
    for (int i = start; i < m; ++i) {
      EchelonBasis next = basis;
      next.insert(row(s, i));
      std::uint32_t child = mask | (1u << i);
      out[child] = static_cast<std::uint8_t>(next.rank());
      if (i + 1 < m) sweep(s, m, i + 1, child, next, out);
    }
  }

  MatrixKind kind_;
  int n_;
  int param_;
  std::shared_ptr<State> state_;
};

}  // namespace cofmat
