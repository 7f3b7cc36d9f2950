#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcert/certificate.hpp"
#include "surfcert/graph.hpp"
#include "surfcert/verifier.hpp"

namespace surfcert {

struct RunReport {
  std::map<VertexId, Verdict> verdicts;
  bool all_accepted = true;
  std::map<RuleTag, std::size_t> reject_rules;
};

/// Builds every vertex's one-round view from the assignment and runs the
/// verifier there. `params.packed` selects which half of the assignment the
/// views are built from.
RunReport run_verification(const Graph& g, const CertificateAssignment& a,
                           const VerifierParams& params);

/// The view of `v`, as run_verification builds it.
LocalView local_view(const Graph& g, const CertificateAssignment& a, bool packed, VertexId v);

/// Seeded random injection of the ids into {1, ..., n^3}, applied to the
/// graph and every id inside the certificates. Seed 0 is not special.
std::pair<Graph, CertificateAssignment> relabel_ids(const Graph& g, const CertificateAssignment& a,
                                                    std::uint64_t seed);
/// The injection relabel_ids uses for this seed.
std::map<VertexId, VertexId> relabeling(const Graph& g, std::uint64_t seed);
Graph relabel_graph(const Graph& g, const std::map<VertexId, VertexId>& map);
/// Rewrites every id inside the certificates; ids outside `map` stay as they are.
CertificateAssignment relabel_assignment(const CertificateAssignment& a,
                                         const std::map<VertexId, VertexId>& map);

struct SizeReport {
  std::map<VertexId, std::uint64_t> bits;
  std::uint64_t max_bits = 0;
  std::size_t n = 0;
  std::int64_t target_eg = 0;
  /// Number of fields of width ceil(log2(maxid + 1)) at the largest vertex.
  std::uint64_t id_fields = 0;
};

/// Bits per vertex (own certificate plus stored edge certificates) under a
/// fixed-width encoding derived from public values: ids take
/// ceil(log2(maxid + 1)) bits, counters and f-indices ceil(log2(2m + 1)),
/// v-indices ceil(log2(max degree)), optional fields one presence bit.
SizeReport meter_sizes(const CertificateAssignment& a, const Graph& g, const VerifierParams& p);

struct MeterRow {
  std::size_t n = 0;
  std::uint64_t max_bits = 0;
  std::uint64_t id_fields = 0;
};

/// Packed g = 0 certificates for the cycles C_8, C_16, ..., C_max_n.
std::vector<MeterRow> meter_cycle_family(std::size_t max_n = 1024);
/// Every doubling adds at most 2 * id_fields + 4 bits.
bool log_growth_ok(const std::vector<MeterRow>& rows);
std::string format_meter_report(const std::vector<MeterRow>& rows, std::uint64_t seed);

enum class StrategyKind {
  random_bits,
  honest_mutate,
  wrong_instance_graft,
  stale_honest,
  fake_F,
  fake_n,
  fake_root,
  sign_strip,
  eta_forgery,
  fake_er,
  phi_collision,
};

const char* to_string(StrategyKind kind) noexcept;
/// Throws std::invalid_argument.
StrategyKind parse_strategy(std::string_view name);

struct AdversaryStrategy {
  StrategyKind kind = StrategyKind::random_bits;
  std::uint64_t seed = 0;
  /// honest-mutate only.
  std::size_t mutation_count = 1;
  /// Overrides the trial count given to fuzz_soundness; 0 keeps it.
  std::size_t trials = 0;
};

/// The default battery: the four sampled families plus every structured
/// attack that applies to the surface kind.
std::vector<AdversaryStrategy> default_battery(bool orientable, std::uint64_t seed,
                                               std::size_t honest_mutate_trials = 1000);

struct StrategyOutcome {
  StrategyKind kind = StrategyKind::random_bits;
  std::size_t trials = 0;
  std::size_t rejected = 0;
  std::size_t violations = 0;
  /// Why no trial ran (no honest source, attack not applicable, ...).
  std::string skipped;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<StrategyOutcome> strategies;
  std::map<RuleTag, std::size_t> rule_tally;
  std::size_t violations = 0;
  std::vector<std::filesystem::path> artifacts;

  bool passed() const noexcept { return violations == 0; }
};

struct FuzzOptions {
  /// Where violation artifacts go. Empty: not written.
  std::filesystem::path artifact_dir;
  std::string label = "instance";
};

/// Attacks an instance that is not in the class. Every trial must be
/// rejected by some vertex; a fully accepted trial is a soundness violation
/// and is saved under `options.artifact_dir`. Throws PreconditionError when
/// the oracle says the instance is embeddable.
FuzzReport fuzz_soundness(const Graph& g, const VerifierParams& p,
                          const std::vector<AdversaryStrategy>& strategies, std::size_t trials,
                          const FuzzOptions& options = {});

std::string format_fuzz_report(const FuzzReport& r, const Graph& g, const VerifierParams& p);

struct SuiteCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteCase> cases;
  std::map<RuleTag, std::size_t> rule_tally;

  bool passed() const noexcept;
};

/// Every fixture proves at its phi genus and is accepted everywhere, logical
/// and packed, under `relabelings` random relabelings.
SuiteReport completeness_suite(std::uint64_t seed = 0, std::size_t relabelings = 50);

/// The fuzz battery on the shipped false instances.
SuiteReport soundness_suite(std::uint64_t seed = 0, std::size_t random_trials = 10000,
                            std::size_t honest_mutate_trials = 1000,
                            const std::filesystem::path& artifact_dir = {});

std::string format_suite_report(const SuiteReport& r);

}  // namespace surfcert
