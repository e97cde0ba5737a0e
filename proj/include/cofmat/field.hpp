#pragma once

// Arithmetic over a prime field GF(p) and row reduction.
//
// The default modulus is the Mersenne prime 2^61 - 1, which admits a
// shift-and-add reduction. Any prime below 2^62 may be substituted.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cofmat/errors.hpp"

namespace cofmat {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod_generic(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_generic(r, a, m);
    a = mulmod_generic(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_generic(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldElement {
  std::uint64_t residue = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
};

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kMersenne61) : p_(p), mersenne_(p == kMersenne61) {
    if (p >= (std::uint64_t{1} << 62) || !is_prime_u64(p))
      throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^62");
  }

  std::uint64_t modulus() const { return p_; }

  FieldElement element(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (mersenne_) {
      unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
      std::uint64_t lo = static_cast<std::uint64_t>(z) & kMersenne61;
      std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
      std::uint64_t s = lo + hi;
      return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    return detail::mulmod_generic(a, b, p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    return pow(a, p_ - 2);
  }

  FieldElement add(FieldElement a, FieldElement b) const { return {add(a.residue, b.residue)}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return {sub(a.residue, b.residue)}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul(a.residue, b.residue)}; }
  FieldElement pow(FieldElement a, std::uint64_t e) const { return {pow(a.residue, e)}; }

 private:
  std::uint64_t p_;
  bool mersenne_;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<std::uint64_t> row(int r) { return {entries_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const std::uint64_t> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  void append_row(std::span<const std::uint64_t> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw PreconditionError("row width mismatch");
    entries_.insert(entries_.end(), r.begin(), r.end());
    ++rows_;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> entries_;
};

// Row-echelon basis that accepts rows one at a time. Each stored row is
// normalised to a leading 1 at its pivot column.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, int cols) : field_(&field), cols_(cols) {}

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }

  // Reduces `r` in place against the basis; returns the first nonzero column or -1.
  int reduce(std::span<std::uint64_t> r) const {
    const PrimeField& f = *field_;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      int pc = pivots_[i];
      std::uint64_t coef = r[pc];
      if (coef == 0) continue;
      const std::uint64_t* b = rows_.data() + i * cols_;
      for (int c = pc; c < cols_; ++c)
        if (b[c]) r[c] = f.sub(r[c], f.mul(coef, b[c]));
    }
    for (int c = 0; c < cols_; ++c)
      if (r[c]) return c;
    return -1;
  }

  bool is_independent(std::span<const std::uint64_t> r) const {
    std::vector<std::uint64_t> tmp(r.begin(), r.end());
    return reduce(tmp) >= 0;
  }

  // Adds the row if independent of the basis; returns whether it was added.
  bool insert(std::span<const std::uint64_t> r) {
    std::vector<std::uint64_t> tmp(r.begin(), r.end());
    int pc = reduce(tmp);
    if (pc < 0) return false;
    std::uint64_t s = field_->inv(tmp[pc]);
    for (int c = pc; c < cols_; ++c) tmp[c] = field_->mul(tmp[c], s);
    rows_.insert(rows_.end(), tmp.begin(), tmp.end());
    pivots_.push_back(pc);
    return true;
  }

 private:
  const PrimeField* field_;
  int cols_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> pivots_;
};

// Rank over GF(p) by Gaussian elimination, pivoting on the first nonzero entry.
inline int rank(const FieldMatrix& m, const PrimeField& field) {
  FieldMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    std::uint64_t inv = field.inv(a.at(r, c));
    for (int i = r + 1; i < a.rows(); ++i) {
      std::uint64_t coef = a.at(i, c);
      if (!coef) continue;
      coef = field.mul(coef, inv);
      for (int j = c; j < a.cols(); ++j)
        if (a.at(r, j)) a.at(i, j) = field.sub(a.at(i, j), field.mul(coef, a.at(r, j)));
    }
    ++r;
  }
  return r;
}

// Deterministic uniform draws in [0,p): `count` values from (seed, p).
inline std::vector<FieldElement> random_field_elements(std::size_t count, std::uint64_t seed,
                                                       const PrimeField& field) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  std::vector<FieldElement> out(count);
  for (auto& x : out) x.residue = dist(gen);
  return out;
}

// n plane points (x_i, y_i); the stream order is x_0, y_0, x_1, y_1, ...
inline std::vector<std::pair<FieldElement, FieldElement>> random_assignment(int n, std::uint64_t seed,
                                                                            const PrimeField& field) {
  if (n < 1) throw PreconditionError("random_assignment needs n >= 1");
  auto flat = random_field_elements(2 * static_cast<std::size_t>(n), seed, field);
  std::vector<std::pair<FieldElement, FieldElement>> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = {flat[2 * i], flat[2 * i + 1]};
  return pts;
}

}  // namespace cofmat
