#pragma once

#include <limits>

#include "mcp/model.hpp"
#include "mcp/simplex.hpp"
#include "mcp/verify.hpp"

namespace mcp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LpStatus status = LpStatus::Optimal;
  double value = 0.0;
  FractionalSolution solution;
};

enum class SolveStatus { Optimal, Infeasible, NodeLimit, TimeLimit };

const char* to_string(SolveStatus s);

struct SolveLimits {
  long long node_limit = 1'000'000;
  double time_limit_s = 600.0;
  int bound_floor = 1;  // external lower bound, e.g. the Euler bound
};

// Known upper bound for pruning; `chosen` maps it onto model variables when
// the heuristic faces survived preprocessing.
struct WarmStart {
  int upper_bound = std::numeric_limits<int>::max();
  std::vector<int> chosen;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  int objective = -1;
  std::vector<int> chosen;
  double lp_root_value = 0.0;
  long long nodes_explored = 0;
  double wall_time_s = 0.0;
  int best_bound = 0;
};

// LP relaxation, integrality ignored, fixed variables pinned. Lazy rows are
// activated until none is violated, so the value equals the full relaxation.
LPResult solve_lp(const Model& m);

// Depth-first branch and bound, down-branch first, most-fractional branching,
// node bound max(ceil(lp - 1e-6), bound_floor).
SolveResult solve_ip(const Model& m, const SolveLimits& limits = {},
                     const WarmStart* warm = nullptr);

// Fan triangulation of all points followed by greedy convex merging; always
// returns a verifier-valid partition.
Partition greedy_partition(const Instance& inst);

// Exhaustive tiling search over the catalog, ground truth for small n.
SolveResult exact_cover_oracle(const Instance& inst, const FaceCatalog& cat,
                               const SolveLimits& limits = {}, int max_points = 14);

// Every complete tiling as a set of face ids (ascending), up to max_count.
std::vector<std::vector<int>> enumerate_tilings(const Instance& inst, const FaceCatalog& cat,
                                                std::size_t max_count = 100000);

double lp_gap_percent(int optimum, double lp_value);

}  // namespace mcp
