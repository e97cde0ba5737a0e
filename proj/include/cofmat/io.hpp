#pragma once

// Text formats.
//
// Edge lists: one "u v" pair of 0-based vertices per line; blank lines and
// '#' comments are ignored. A header line "n=<k>" fixes the ambient K_n,
// which otherwise is one more than the largest vertex index.
//
// Matroids:
//
//   ground_size <g>
//   rank <r>
//   bases <count>
//   <base bitmask, decimal>      (count lines)
//
// or, in place of the three-line rank/bases block,
//
//   ground_size <g>
//   oracle:cofactor n=<n> s=<s> seeds=<a,b,...> [modulus=<p>] [truncate=<k>]
//
// which denotes the cofactor matroid on E(K_n) (optionally truncated to
// rank k) with edge indices as elements.

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cofmat/errors.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/oracle.hpp"
#include "cofmat/standard.hpp"

namespace cofmat {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::string_view strip_comment(std::string_view s) {
  auto h = s.find('#');
  return h == std::string_view::npos ? s : s.substr(0, h);
}

template <class T>
T parse_number(std::string_view tok, int line, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline EdgeSet parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int header_n = -1;
  int max_v = -1;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = detail::trim(detail::strip_comment(raw));
    if (s.empty()) continue;
    if (s.starts_with("n=")) {
      if (header_n >= 0) throw ParseError("line " + std::to_string(line) + ": duplicate n= header");
      header_n = detail::parse_number<int>(detail::trim(s.substr(2)), line, "vertex count");
      continue;
    }
    auto tok = detail::split_ws(s);
    if (tok.size() != 2) throw ParseError("line " + std::to_string(line) + ": expected 'u v'");
    int u = detail::parse_number<int>(tok[0], line, "vertex");
    int v = detail::parse_number<int>(tok[1], line, "vertex");
    if (u < 0 || v < 0) throw ParseError("line " + std::to_string(line) + ": negative vertex");
    if (u == v) throw ParseError("line " + std::to_string(line) + ": loop " + std::to_string(u));
    edges.emplace_back(u, v);
    max_v = std::max({max_v, u, v});
  }
  int n = header_n >= 0 ? header_n : max_v + 1;
  if (header_n >= 0 && max_v >= header_n)
    throw ParseError("vertex " + std::to_string(max_v) + " outside header n=" + std::to_string(header_n));
  if (n < 0) n = 0;
  EdgeSet f(n);
  for (const Edge& e : edges) f.insert(e);
  return f;
}

inline EdgeSet parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return parse_edge_list(is);
}

inline void write_edge_list(std::ostream& out, const EdgeSet& f) {
  out << "n=" << f.ambient() << '\n';
  for (const Edge& e : f.edges()) out << e.u << ' ' << e.v << '\n';
}

// ---------------------------------------------------------------------------

inline std::vector<Subset> bases(const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  ExplicitMatroid::check_cap(m.ground_size(), cap);
  const int r = m.rank();
  std::vector<Subset> out;
  for (std::size_t x = 0, total = std::size_t{1} << m.ground_size(); x < total; ++x)
    if (card(static_cast<Subset>(x)) == r && m.rank(static_cast<Subset>(x)) == r) out.push_back(static_cast<Subset>(x));
  return out;
}

inline void write_matroid(std::ostream& out, const ExplicitMatroid& m, int cap = kDefaultEnumerationCap) {
  auto bs = bases(m, cap);
  out << "ground_size " << m.ground_size() << '\n' << "rank " << m.rank() << '\n' << "bases " << bs.size() << '\n';
  for (Subset b : bs) out << b << '\n';
}

struct OracleSpec {
  int n = 0;
  int s = 2;
  OracleOptions options;
  int truncate = -1;
};

inline OracleSpec parse_oracle_line(std::string_view s, int line) {
  OracleSpec spec;
  auto tok = detail::split_ws(s);
  if (tok.empty() || tok[0] != "oracle:cofactor")
    throw ParseError("line " + std::to_string(line) + ": expected oracle:cofactor");
  bool have_n = false;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    auto eq = tok[i].find('=');
    if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line) + ": expected key=value");
    auto key = tok[i].substr(0, eq);
    auto val = tok[i].substr(eq + 1);
    if (key == "n") {
      spec.n = detail::parse_number<int>(val, line, "n");
      have_n = true;
    } else if (key == "s") {
      spec.s = detail::parse_number<int>(val, line, "s");
    } else if (key == "modulus") {
      spec.options.modulus = detail::parse_number<std::uint64_t>(val, line, "modulus");
    } else if (key == "truncate") {
      spec.truncate = detail::parse_number<int>(val, line, "truncate");
    } else if (key == "seeds") {
      spec.options.seeds.clear();
      std::size_t a = 0;
      while (a <= val.size()) {
        auto b = val.find(',', a);
        if (b == std::string_view::npos) b = val.size();
        spec.options.seeds.push_back(detail::parse_number<std::uint64_t>(val.substr(a, b - a), line, "seed"));
        a = b + 1;
      }
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_n) throw ParseError("line " + std::to_string(line) + ": oracle line needs n=");
  if (spec.options.seeds.empty()) throw ParseError("line " + std::to_string(line) + ": empty seed list");
  return spec;
}

inline ExplicitMatroid parse_matroid(std::istream& in, int cap = kDefaultEnumerationCap) {
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  for (int ln = 1; std::getline(in, raw); ++ln) {
    std::string_view s = detail::trim(detail::strip_comment(raw));
    if (!s.empty()) lines.emplace_back(ln, std::string(s));
  }
  std::size_t pos = 0;
  auto expect_kv = [&](const char* key) {
    if (pos >= lines.size()) throw ParseError(std::string("missing '") + key + "' line");
    auto [ln, text] = lines[pos++];
    auto tok = detail::split_ws(text);
    if (tok.size() != 2 || tok[0] != key) throw ParseError("line " + std::to_string(ln) + ": expected '" + key + " <int>'");
    return std::pair{ln, detail::parse_number<long long>(tok[1], ln, key)};
  };
  auto [gl, g] = expect_kv("ground_size");
  if (g < 0 || g > kMaxGround) throw CapExceeded("ground size " + std::to_string(g) + " outside [0,24]");
  if (g > cap) throw CapExceeded("ground size " + std::to_string(g) + " exceeds enumeration cap " + std::to_string(cap));
  const int gi = static_cast<int>(g);
  if (pos < lines.size() && lines[pos].second.starts_with("oracle:")) {
    auto [ln, text] = lines[pos++];
    OracleSpec spec = parse_oracle_line(text, ln);
    if (pos != lines.size()) throw ParseError("line " + std::to_string(lines[pos].first) + ": trailing content");
    if (num_edges(spec.n) != gi)
      throw ParseError("ground_size " + std::to_string(gi) + " does not match C(" + std::to_string(spec.n) + ",2)");
    ExplicitMatroid m = oracle_matroid(CofactorOracle::cofactor(spec.n, spec.s, spec.options));
    if (spec.truncate >= 0) {
      if (spec.truncate > m.rank()) throw ParseError("truncate=" + std::to_string(spec.truncate) + " above the rank");
      m = truncate(m, spec.truncate);
    }
    return m;
  }
  auto [rl, r] = expect_kv("rank");
  auto [bl, count] = expect_kv("bases");
  if (count < 1) throw ParseError("line " + std::to_string(bl) + ": at least one base required");
  if (lines.size() - pos != static_cast<std::size_t>(count))
    throw ParseError("expected " + std::to_string(count) + " base lines, found " + std::to_string(lines.size() - pos));
  std::vector<Subset> bs;
  for (; pos < lines.size(); ++pos) {
    auto [ln, text] = lines[pos];
    auto b = detail::parse_number<unsigned long long>(text, ln, "base");
    if (b > full_subset(gi)) throw ParseError("line " + std::to_string(ln) + ": base outside the ground set");
    if (card(static_cast<Subset>(b)) != r)
      throw ParseError("line " + std::to_string(ln) + ": base size differs from rank " + std::to_string(r));
    bs.push_back(static_cast<Subset>(b));
  }
  std::sort(bs.begin(), bs.end());
  if (std::adjacent_find(bs.begin(), bs.end()) != bs.end()) throw ParseError("duplicate base");
  ExplicitMatroid m = ExplicitMatroid::from_bases(gi, bs, cap);
  if (auto v = check_rank_axioms(m, cap); !v.ok) throw ParseError("base list is not a matroid: " + v.detail);
  return m;
}

inline ExplicitMatroid parse_matroid(const std::string& text, int cap = kDefaultEnumerationCap) {
  std::istringstream is(text);
  return parse_matroid(is, cap);
}

}  // namespace cofmat
