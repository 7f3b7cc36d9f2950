#pragma once

#include <cstdint>

#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace surfcert {

/// Brute-force minimum Euler genus, used as ground truth by the tests.
/// Faces are always counted with the direction-carrying (doubled) tracer,
/// never with the phi map the certificates are built from.

struct OracleBudget {
  std::uint64_t max_rotation_systems = 10'000'000;
  std::uint64_t max_sign_classes = std::uint64_t{1} << 16;
};

struct OracleResult {
  std::int64_t min_eg = 0;
  EmbeddingScheme witness;
  std::uint64_t systems_searched = 0;
};

/// Product over vertices of (deg - 1)!, saturating at UINT64_MAX.
std::uint64_t rotation_system_count(const Graph& g);

/// 2^(m - n + 1), saturating.
std::uint64_t sign_class_count(const Graph& g);

/// Every rotation system, one anchor per vertex fixed. Throws BudgetExceeded.
OracleResult min_genus_orientable(const Graph& g, const OracleBudget& budget = {});

/// Every rotation system times every non-orientable sign class (signs +1 on a
/// BFS tree, at least one non-tree edge negative). Throws BudgetExceeded, and
/// std::invalid_argument for trees, which have no non-orientable cellular
/// embedding.
OracleResult min_genus_nonorientable(const Graph& g, const OracleBudget& budget = {});

/// Euler-formula lower bound: every face of a simple graph with m >= 2 has
/// degree >= 3, so eg >= 2 + m - n - floor(2m / 3).
std::int64_t euler_lower_bound(const Graph& g);

/// Whether `g` embeds on a surface of the given kind with Euler genus at most
/// `target_eg`. Trees always embed; the Euler lower bound and the fixture
/// catalogue settle instances beyond the enumeration budget; otherwise the
/// enumeration runs and stops at the first witness.
bool is_embeddable(const Graph& g, std::int64_t target_eg, bool orientable,
                   const OracleBudget& budget = {});

}  // namespace surfcert
