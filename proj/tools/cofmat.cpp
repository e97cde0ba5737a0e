// Command-line front end: ranks with certificates, closures, free
// elevations, Dress covers and the verification suites.
//
// JSON goes to stdout, human-readable summaries to stderr.
// Exit codes: 0 ok, 1 property or witness failure, 2 input error, 3 cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cofmat/cover.hpp"
#include "cofmat/erection.hpp"
#include "cofmat/errors.hpp"
#include "cofmat/io.hpp"
#include "cofmat/k5_sequence.hpp"
#include "cofmat/oracle.hpp"
#include "cofmat/verify.hpp"

using namespace cofmat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kCapError = 3 };

struct RunConfig {
  std::string graph;
  std::string input;
  std::string out;
  std::string certificate;
  std::string cover_file;
  std::string suite = "all";
  std::string pool = "support";
  int s = 2;
  int dim = 0;
  std::uint64_t modulus = kMersenne61;
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  int cap_n = 9;
  int cap_ground = kDefaultEnumerationCap;
  bool force = false;
  bool table = false;
};

EdgeSet read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_edge_list(in);
}

CofactorOracle make_oracle(const RunConfig& rc, int n) {
  OracleOptions opts{rc.modulus, rc.seeds};
  if (rc.dim > 0) return CofactorOracle::rigidity(n, rc.dim, opts);
  return CofactorOracle::cofactor(n, rc.s, opts);
}

json oracle_json(const CofactorOracle& o) {
  json j = {{"seeds", o.seeds()}, {"modulus", o.modulus()}};
  if (o.kind() == MatrixKind::cofactor)
    j["s"] = o.parameter();
  else
    j["dim"] = o.parameter();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

int cmd_rank(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  json cert = {{"n", f.ambient()}, {"edges", edges_json(f)}};
  cert.update(oracle_json(o));
  if (o.kind() == MatrixKind::cofactor && o.parameter() == 2) {
    SequenceSearchOptions opts;
    opts.pool = rc.pool == "all" ? VertexSet::range(f.ambient()) : VertexSet{};
    opts.cap_pool = rc.cap_n;
    opts.force = rc.force;
    RankCertificate rcert = rank_certificate(f, o, opts);
    cert["rank"] = rcert.rank;
    cert["independent_set"] = edges_json(rcert.independent_set);
    cert["k5_sequence"] = sequence_json(rcert.sequence);
    cert["sequence_value"] = seq_value(f, rcert.sequence);
  } else {
    // the sequence formula is a theorem only for s = 2
    cert["rank"] = o.rank(f);
    cert["independent_set"] = edges_json(o.greedy_base(f));
    cert["k5_sequence"] = nullptr;
  }
  std::cerr << "rank " << cert["rank"].get<int>() << " on " << f.size() << " edges of K_" << f.ambient() << '\n';
  if (!rc.certificate.empty()) write_file(rc.certificate, cert.dump(2) + "\n");
  emit(cert);
  return kOk;
}

int cmd_independent(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  json j = {{"n", f.ambient()}, {"edge_count", f.size()}, {"rank", o.rank(f)}, {"independent", o.is_independent(f)}};
  j.update(oracle_json(o));
  emit(j);
  return kOk;
}

int cmd_rigid(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  json j = {{"n", f.ambient()}, {"rank", o.rank(f)}, {"full_rank", o.full_rank()}, {"rigid", o.is_rigid(f)}};
  j.update(oracle_json(o));
  emit(j);
  return kOk;
}

int cmd_closure(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  EdgeSet cl = o.closure(f);
  json j = {{"n", f.ambient()}, {"rank", o.rank(f)}, {"closure", edges_json(cl)}, {"added", edges_json(cl - f)}};
  j.update(oracle_json(o));
  if (!rc.out.empty()) {
    std::ostringstream os;
    write_edge_list(os, cl);
    write_file(rc.out, os.str());
  }
  emit(j);
  return kOk;
}

int cmd_elevate(const RunConfig& rc) {
  std::ifstream in(rc.input);
  if (!in) throw ParseError("cannot open " + rc.input);
  const int cap = rc.force ? kMaxGround : rc.cap_ground;
  ExplicitMatroid m = parse_matroid(in, cap);
  ErectionChain chain = free_elevation(m, cap);
  json steps = json::array();
  std::cerr << std::left << std::setw(6) << "step" << std::setw(6) << "rank" << std::setw(14) << "cyclic_flats"
            << std::setw(10) << "closure" << std::setw(13) << "cyclic_sets" << std::setw(9) << "trivial"
            << "ms\n";
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    const int r = chain.matroids[i].rank();
    steps.push_back({{"rank", r},
                     {"cyclic_flats", s.cyclic_flats},
                     {"closure", s.closure.size()},
                     {"cyclic_sets", s.cyclic_sets},
                     {"trivial", s.trivial}});
    std::cerr << std::setw(6) << i << std::setw(6) << r << std::setw(14) << s.cyclic_flats << std::setw(10)
              << s.closure.size() << std::setw(13) << s.cyclic_sets << std::setw(9) << (s.trivial ? "yes" : "no")
              << std::fixed << std::setprecision(1) << s.elapsed_ms << '\n';
  }
  json j = {{"ground_size", m.ground_size()},
            {"initial_rank", m.rank()},
            {"final_rank", chain.elevation().rank()},
            {"nontrivial_steps", chain.nontrivial_steps()},
            {"steps", steps}};
  if (rc.table) j["final_rank_table"] = chain.elevation().materialized(cap).table();
  if (!rc.out.empty()) {
    std::ostringstream os;
    write_matroid(os, chain.elevation(), cap);
    write_file(rc.out, os.str());
  }
  emit(j);
  return kOk;
}

int cmd_dress(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  EdgeSet g = o.closure(f);
  DressResult d = dress_rank(g, o);
  d.input_flat = g == f;
  std::cerr << "rank " << d.rank << " = |F0| " << d.f0.size() << " + val_D " << d.val_d << " over "
            << d.cliques.size() << " clique(s)\n";
  emit(d.to_json());
  return kOk;
}

std::vector<VertexSet> read_cover(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<VertexSet> fam;
  std::string line;
  for (int ln = 1; std::getline(in, line); ++ln) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    VertexSet x;
    std::string tok;
    while (is >> tok) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("cover line " + std::to_string(ln) + ": bad vertex '" + tok + "'");
      }
      if (v < 0 || v >= n) throw ParseError("cover line " + std::to_string(ln) + ": vertex outside K_n");
      x.insert(v);
    }
    if (!x.empty()) fam.push_back(x);
  }
  return fam;
}

int cmd_covers(const RunConfig& rc) {
  EdgeSet f = read_graph(rc.graph);
  auto o = make_oracle(rc, f.ambient());
  const int n = f.ambient();
  json j = {{"n", n}, {"edges", edges_json(f)}, {"rank", o.rank(f)}};
  if (!rc.cover_file.empty()) {
    CliqueCover cover{n, read_cover(rc.cover_file, n)};
    const std::size_t cap = rc.force ? 31 : kShellingSearchCap;
    auto order = find_degenerate_order(cover, o, cap);
    j["cover"] = cover_json(cover.members);
    j["hinges"] = hinges_json(hinges(cover.members));
    j["degenerate_order"] = order ? json(*order) : json(nullptr);
    j["val_D"] = val_D(cover);
    j["upper_bound"] = cover_upper_bound(f, cover, o);
  } else {
    MaximalCliques mc = maximal_cliques(f, 5);
    const std::size_t cap = rc.force ? 31 : kShellingSearchCap;
    auto shell = find_shellable_order(mc.cover, 4, cap);
    auto degen = find_degenerate_order(mc.cover, o, cap);
    const int v = val_D(mc.cover);
    j["cliques"] = cover_json(mc.cover.members);
    j["F0"] = edges_json(mc.uncovered);
    j["hinges"] = hinges_json(hinges(mc.cover.members));
    j["two_thin"] = is_thin(mc.cover.members, 2);
    j["shelling_order"] = shell ? json(*shell) : json(nullptr);
    j["degenerate_order"] = degen ? json(*degen) : json(nullptr);
    j["val_D"] = v;
    // with a degenerate cover, |F0| + val_D bounds the rank from above
    j["upper_bound"] = degen ? json(mc.uncovered.size() + v) : json(nullptr);
    if (degen && o.rank(f) > mc.uncovered.size() + v)
      throw WitnessMismatch("rank exceeds the cover bound", j.dump());
  }
  emit(j);
  return kOk;
}

int cmd_verify(const RunConfig& rc) {
  VerifyConfig cfg;
  cfg.oracle = {rc.modulus, rc.seeds};
  std::vector<CheckResult> results;
  std::vector<FlatSample> flats;
  const std::string& s = rc.suite;
  auto want = [&](const char* name) { return s == "all" || s == name; };
  bool known = false;
  if (want("axioms")) {
    known = true;
    results.push_back(check_complete_ranks(5, 13, cfg));
    results.push_back(check_k5_circuits(8, cfg));
    results.push_back(check_graver_axioms(8, 200, cfg));
    results.push_back(check_cross_oracle(standard_corpus(), 200, cfg));
    results.push_back(check_degree_bounds(100, cfg));
  }
  if (want("theorem56-sweep")) {
    known = true;
    std::vector<FlatSample> local;
    results.push_back(check_sequence_sweep(6, cfg, &local));
    results.push_back(check_simplicial(local, cfg));
  }
  if (want("elevation")) {
    known = true;
    std::vector<FlatSample> local;
    auto e = check_elevation(6, cfg, &local);
    results.push_back(e.elevation);
    results.push_back(e.cover);
    results.push_back(check_simplicial(local, cfg));
  }
  if (want("dress")) {
    known = true;
    std::vector<FlatSample> local;
    results.push_back(check_dress_random(7, 100, cfg, &local, 3));
    for (int n = 8; n <= 10; ++n) results.push_back(check_dress_structured(n, 100, cfg, &local));
    results.push_back(check_cover_soundness(200, cfg));
    results.push_back(check_simplicial(local, cfg));
  }
  if (want("connectivity")) {
    known = true;
    results.push_back(check_connectivity(13, 6, 100, cfg));
  }
  if (want("extensions")) {
    known = true;
    results.push_back(check_extensions(8, 200, cfg));
  }
  if (!known) throw ParseError("unknown suite '" + s + "'");
  json arr = json::array();
  bool ok = true;
  for (const auto& r : results) {
    arr.push_back(r.to_json());
    ok = ok && r.passed;
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << std::fixed
              << std::setprecision(2) << r.seconds << " s)" << (r.passed ? "" : ": " + r.detail) << '\n';
  }
  emit({{"suite", s}, {"passed", ok}, {"checks", arr}});
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic cofactor matroids: ranks, certificates, elevations and covers"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_oracle_flags = [&](CLI::App* c) {
    c->add_option("--s", rc.s, "spline degree s of the cofactor matrix")->check(CLI::NonNegativeNumber);
    c->add_option("--dim", rc.dim, "use d-dimensional rigidity rows instead")->check(CLI::Range(1, 3));
    c->add_option("--modulus", rc.modulus, "prime modulus below 2^62");
    c->add_option("--seeds", rc.seeds, "comma-separated configuration seeds")->delimiter(',');
    c->add_flag("--force", rc.force, "lift enumeration caps");
  };
  auto graph_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--graph", rc.graph, "edge-list file")->required();
    add_oracle_flags(c);
    return c;
  };

  CLI::App* rank = graph_cmd("rank", "rank with matching lower and upper witnesses");
  rank->add_option("--certificate", rc.certificate, "write the certificate JSON here too");
  rank->add_option("--pool", rc.pool, "candidate K5 vertices")->check(CLI::IsMember({"support", "all"}));
  rank->add_option("--cap-n", rc.cap_n, "largest vertex pool searched without --force");
  graph_cmd("independent", "is the edge set independent");
  graph_cmd("rigid", "does the edge set span the matroid");
  CLI::App* closure = graph_cmd("closure", "closure of the edge set");
  closure->add_option("--out", rc.out, "write the closure as an edge list");
  graph_cmd("dress", "rank of the closure from its maximal cliques");
  CLI::App* covers = graph_cmd("covers", "cover bounds for an edge set");
  covers->add_option("--cover", rc.cover_file, "cover file: one vertex set per line");

  CLI::App* elevate = app.add_subcommand("elevate", "free elevation of an explicit matroid");
  elevate->add_option("--input", rc.input, "matroid file")->required();
  elevate->add_option("--out", rc.out, "write the final matroid here");
  elevate->add_flag("--table", rc.table, "include the final rank table in the report");
  elevate->add_flag("--force", rc.force, "lift the ground-size cap");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", rc.suite, "axioms, theorem56-sweep, elevation, dress, connectivity, extensions or all");
  verify->add_option("--modulus", rc.modulus, "prime modulus below 2^62");
  verify->add_option("--seeds", rc.seeds, "comma-separated configuration seeds")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (rc.seeds.empty()) throw PreconditionError("seed list is empty");
    if (rc.force) std::cerr << "warning: --force lifts enumeration caps\n";
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "rank") return cmd_rank(rc);
    if (name == "independent") return cmd_independent(rc);
    if (name == "rigid") return cmd_rigid(rc);
    if (name == "closure") return cmd_closure(rc);
    if (name == "elevate") return cmd_elevate(rc);
    if (name == "dress") return cmd_dress(rc);
    if (name == "covers") return cmd_covers(rc);
    if (name == "verify") return cmd_verify(rc);
  } catch (const WitnessMismatch& e) {
    std::cerr << "witness mismatch: " << e.what() << '\n';
    std::cout << e.diagnostic << '\n';
    return kFailure;
  } catch (const SeedDisagreement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (use --force)\n";
    return kCapError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInputError;
}
