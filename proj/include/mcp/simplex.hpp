#pragma once

#include "mcp/model.hpp"

namespace mcp {

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexOptions {
  double feas_tol = 1e-6;
  double pivot_tol = 1e-9;
  double cost_tol = 1e-7;
  int bland_after = 1000;   // degenerate pivots before switching to Bland's rule
  int refactor_every = 2000;
  long long iter_limit = 2'000'000;
};

// Two-phase primal simplex for min c'x, rows with senses, bounded variables.
// Dense basis inverse, eta updates, periodic refactorization. Deterministic:
// Dantzig pricing with index tie-breaks, Bland's rule under degeneracy.
class Simplex {
 public:
  explicit Simplex(int num_structural);

  void set_cost(int var, double c);
  void set_bounds(int var, double lo, double hi);
  void add_row(const std::vector<std::pair<int, double>>& coef, Sense sense, double rhs);

  SimplexStatus solve(const SimplexOptions& opts = {});

  double objective() const { return obj_; }
  double value(int var) const { return x_[var]; }
  // max violation over rows and bounds for the structural solution
  double max_residual() const;

 private:
  struct RowDef {
    std::vector<std::pair<int, double>> coef;
    Sense sense;
    double rhs;
  };

  int ns_;
  std::vector<double> cost_, lo_, hi_;
  std::vector<RowDef> rows_;
  std::vector<double> x_;
  double obj_ = 0.0;
};

}  // namespace mcp
