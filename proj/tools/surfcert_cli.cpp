// Command-line front end. Exit codes:
//   0 success, 1 bad input or precondition, 2 oracle budget exceeded,
//   3 genus above target, 4 prover self-check failure, 5 verifier rejection,
//   6 fuzz or suite failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "surfcert/certificate.hpp"
#include "surfcert/embedding.hpp"
#include "surfcert/errors.hpp"
#include "surfcert/graph.hpp"
#include "surfcert/harness.hpp"
#include "surfcert/oracle.hpp"
#include "surfcert/prover.hpp"

using namespace surfcert;

namespace {

enum Exit { ok = 0, bad_input = 1, budget = 2, genus_too_large = 3, self_check = 4, rejected = 5,
            failed = 6 };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_genus(const std::string& graph_file, bool nonorientable, std::uint64_t max_systems,
              const std::string& witness_file) {
  Graph g = parse_graph(slurp(graph_file));
  OracleBudget b;
  if (max_systems) b.max_rotation_systems = max_systems;
  OracleResult r = nonorientable ? min_genus_nonorientable(g, b) : min_genus_orientable(g, b);
  std::cout << "min_eg " << r.min_eg << '\n' << "systems_searched " << r.systems_searched << '\n';
  if (witness_file.empty()) {
    std::cout << format_embedding(r.witness);
  } else {
    emit(format_embedding(r.witness), witness_file);
  }
  return ok;
}

int cmd_faces(const std::string& graph_file, const std::string& embedding_file) {
  Graph g = parse_graph(slurp(graph_file));
  EmbeddingScheme s = parse_embedding(slurp(embedding_file));
  validate_scheme(g, s);
  SchemeDiagnostics d = diagnose(g, s);
  FaceStructure fs = trace_faces_phi(g, s);
  std::cout << "phi_faces " << d.phi_face_count << '\n'
            << "doubled_faces " << d.doubled_face_count << '\n'
            << "euler_genus " << d.euler_genus_doubled << '\n'
            << "phi_euler_genus " << d.euler_genus_phi << '\n'
            << "phi_bijective " << (d.phi_bijective ? "yes" : "no") << '\n'
            << "face_indices_feasible " << (fs.indices_feasible ? "yes" : "no") << '\n'
            << "orientable " << (d.orientable ? "yes" : "no") << '\n';
  for (std::size_t f = 0; f < fs.face_count; ++f) {
    std::cout << "face " << f << " root " << fs.root_of[f] << " length " << fs.degree[f] << '\n';
  }
  return ok;
}

int cmd_prove(const std::string& graph_file, const std::string& embedding_file,
              std::int64_t target, bool nonorientable, bool packed, const std::string& out) {
  Graph g = parse_graph(slurp(graph_file));
  std::optional<EmbeddingScheme> s;
  if (!embedding_file.empty()) s = parse_embedding(slurp(embedding_file));
  const bool want_nonorientable = nonorientable || (s && !s->orientable_mode);

  CertificateAssignment a;
  if (g.is_tree() && (want_nonorientable || !s)) {
    a = prove_tree(g, target);
  } else {
    if (!s) throw std::invalid_argument("an embedding file is required for graphs with cycles");
    if (nonorientable && s->orientable_mode) {
      throw std::invalid_argument("--nonorientable needs an embedding file declared nonorientable");
    }
    a = prove(g, *s, target);
  }
  if (packed) a = pack(g, a);
  emit(format_bundle(a), out);
  return ok;
}

int cmd_verify(const std::string& graph_file, const std::string& bundle_file,
               std::optional<std::int64_t> target, std::optional<bool> orientable) {
  Graph g = parse_graph(slurp(graph_file));
  CertificateAssignment a = parse_bundle(slurp(bundle_file));
  VerifierParams p;
  p.target_eg = target.value_or(a.target_eg);
  p.orientable = orientable.value_or(a.mode != CertMode::nonorientable);
  p.packed = a.packed();
  RunReport r = run_verification(g, a, p);
  std::size_t accepted = 0;
  for (const auto& [v, verdict] : r.verdicts) {
    if (verdict.accepted) {
      ++accepted;
      continue;
    }
    std::cout << "vertex " << v << " reject " << to_string(*verdict.rule) << ' ' << verdict.detail
              << '\n';
  }
  std::cout << "accepted " << accepted << '/' << g.order() << '\n';
  return r.all_accepted ? ok : rejected;
}

int cmd_fuzz(const std::string& graph_file, std::int64_t target, bool nonorientable, bool packed,
             std::size_t trials, std::size_t mutate_trials, std::uint64_t seed,
             const std::vector<std::string>& names, const std::string& artifacts) {
  Graph g = parse_graph(slurp(graph_file));
  VerifierParams p{target, !nonorientable, packed};
  std::vector<AdversaryStrategy> strategies;
  if (names.empty()) {
    strategies = default_battery(p.orientable, seed, mutate_trials);
  } else {
    for (const auto& name : names) {
      AdversaryStrategy s;
      s.kind = parse_strategy(name);
      s.seed = seed;
      if (s.kind == StrategyKind::honest_mutate) {
        s.mutation_count = 3;
        s.trials = mutate_trials;
      }
      strategies.push_back(s);
    }
  }
  FuzzOptions options;
  options.artifact_dir = artifacts;
  FuzzReport r = fuzz_soundness(g, p, strategies, trials, options);
  std::cout << format_fuzz_report(r, g, p);
  return r.passed() ? ok : failed;
}

int cmd_meter(std::size_t max_n, std::uint64_t seed) {
  auto rows = meter_cycle_family(max_n);
  std::cout << format_meter_report(rows, seed);
  return log_growth_ok(rows) ? ok : failed;
}

int cmd_suite(std::uint64_t seed, std::size_t trials, std::size_t mutate_trials,
              std::size_t relabelings, const std::string& artifacts) {
  SuiteReport c = completeness_suite(seed, relabelings);
  SuiteReport s = soundness_suite(seed, trials, mutate_trials, artifacts);
  auto rows = meter_cycle_family(1024);
  std::cout << format_suite_report(c) << format_suite_report(s)
            << format_meter_report(rows, seed);
  const bool pass = c.passed() && s.passed() && log_growth_ok(rows);
  std::cout << "report suite seed=" << seed << " trials=" << trials << '\n'
            << "RESULT " << (pass ? "pass" : "fail") << '\n';
  return pass ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify that a graph embeds on a surface of bounded Euler genus"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed (default 0)");
  };

  std::string graph_file, embedding_file, bundle_file, out_file, artifacts;
  std::int64_t target = 0;
  bool nonorientable = false, orientable_flag = false, packed = false;
  std::uint64_t max_systems = 0;
  std::size_t trials = 10000, mutate_trials = 1000, max_n = 1024, relabelings = 50;
  std::vector<std::string> strategies;

  auto* genus = app.add_subcommand("genus", "Minimum Euler genus by exhaustive search");
  genus->add_option("graph", graph_file, "Graph file")->required();
  auto* g_or = genus->add_flag("--orientable", orientable_flag, "Orientable surfaces (default)");
  genus->add_flag("--nonorientable", nonorientable, "Non-orientable surfaces")->excludes(g_or);
  genus->add_option("--budget", max_systems, "Maximum number of rotation systems");
  genus->add_option("--witness", out_file, "Write the witness embedding here");
  add_seed(genus);

  auto* faces = app.add_subcommand("faces", "Face structure of an embedding scheme");
  faces->add_option("graph", graph_file, "Graph file")->required();
  faces->add_option("embedding", embedding_file, "Embedding file")->required();
  add_seed(faces);

  auto* prove_cmd = app.add_subcommand("prove", "Build and self-check certificates");
  prove_cmd->add_option("graph", graph_file, "Graph file")->required();
  prove_cmd->add_option("embedding", embedding_file, "Embedding file (optional for trees)");
  prove_cmd->add_option("--target-eg", target, "Target Euler genus")->required();
  prove_cmd->add_flag("--nonorientable", nonorientable, "Certify a non-orientable target");
  prove_cmd->add_flag("--packed", packed, "Store edge certificates at vertices");
  prove_cmd->add_option("-o,--output", out_file, "Bundle file (default stdout)");
  add_seed(prove_cmd);

  std::optional<std::int64_t> verify_target;
  auto* verify_cmd = app.add_subcommand("verify", "Run the local verifier at every vertex");
  verify_cmd->add_option("graph", graph_file, "Graph file")->required();
  verify_cmd->add_option("bundle", bundle_file, "Certificate bundle")->required();
  verify_cmd->add_option("--target-eg", verify_target, "Target Euler genus (default: bundle header)");
  auto* v_or = verify_cmd->add_flag("--orientable", orientable_flag, "Orientable target");
  auto* v_non =
      verify_cmd->add_flag("--nonorientable", nonorientable, "Non-orientable target")->excludes(v_or);
  add_seed(verify_cmd);

  auto* fuzz = app.add_subcommand("fuzz", "Attack a false instance with forged certificates");
  fuzz->add_option("graph", graph_file, "Graph file")->required();
  fuzz->add_option("--target-eg", target, "Target Euler genus")->required();
  fuzz->add_flag("--nonorientable", nonorientable, "Non-orientable target");
  fuzz->add_flag("--packed", packed, "Attack the packed verifier");
  fuzz->add_option("--trials", trials, "Trials per sampled strategy");
  fuzz->add_option("--mutate-trials", mutate_trials, "honest-mutate trials");
  fuzz->add_option("--strategy", strategies, "Strategy name (repeatable; default: full battery)");
  fuzz->add_option("--artifacts", artifacts, "Directory for violation artifacts");
  add_seed(fuzz);

  auto* meter = app.add_subcommand("meter", "Certificate sizes on the cycle family");
  meter->add_option("--max-n", max_n, "Largest cycle");
  add_seed(meter);

  auto* suite = app.add_subcommand("suite", "Completeness, soundness and metering end to end");
  suite->add_option("--trials", trials, "random-bits trials per instance");
  suite->add_option("--mutate-trials", mutate_trials, "honest-mutate trials per instance");
  suite->add_option("--relabelings", relabelings, "Relabelings per fixture");
  suite->add_option("--artifacts", artifacts, "Directory for violation artifacts");
  add_seed(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*genus) return cmd_genus(graph_file, nonorientable, max_systems, out_file);
    if (*faces) return cmd_faces(graph_file, embedding_file);
    if (*prove_cmd) {
      return cmd_prove(graph_file, embedding_file, target, nonorientable, packed, out_file);
    }
    if (*verify_cmd) {
      std::optional<bool> orientable;
      if (orientable_flag) orientable = true;
      if (v_non->count()) orientable = false;
      return cmd_verify(graph_file, bundle_file, verify_target, orientable);
    }
    if (*fuzz) {
      return cmd_fuzz(graph_file, target, nonorientable, packed, trials, mutate_trials, seed,
                      strategies, artifacts);
    }
    if (*meter) return cmd_meter(max_n, seed);
    if (*suite) return cmd_suite(seed, trials, mutate_trials, relabelings, artifacts);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const ProverError& e) {
    std::cerr << "prover: " << e.what() << '\n';
    switch (e.kind()) {
      case ProverErrorKind::genus_exceeds_target: return genus_too_large;
      case ProverErrorKind::self_check_failed:
      case ProverErrorKind::infeasible_face_indices: return self_check;
      default: return bad_input;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
  return ok;
}
