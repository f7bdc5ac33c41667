#include "mcp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Simplex::Simplex(int num_structural)
    : ns_(num_structural), cost_(num_structural, 0.0), lo_(num_structural, 0.0),
      hi_(num_structural, 1.0) {}

void Simplex::set_cost(int var, double c) { cost_[var] = c; }

void Simplex::set_bounds(int var, double lo, double hi) {
  lo_[var] = lo;
  hi_[var] = hi;
}

void Simplex::add_row(const std::vector<std::pair<int, double>>& coef, Sense sense, double rhs) {
  rows_.push_back(RowDef{coef, sense, rhs});
}

double Simplex::max_residual() const {
  double worst = 0.0;
  for (const RowDef& row : rows_) {
    double lhs = 0.0;
    for (const auto& [v, c] : row.coef) lhs += c * x_[v];
    double viol = 0.0;
    switch (row.sense) {
      case Sense::Eq: viol = std::abs(lhs - row.rhs); break;
      case Sense::Le: viol = std::max(0.0, lhs - row.rhs); break;
      case Sense::Ge: viol = std::max(0.0, row.rhs - lhs); break;
    }
    worst = std::max(worst, viol);
  }
  for (int v = 0; v < ns_; ++v) {
    worst = std::max(worst, lo_[v] - x_[v]);
    worst = std::max(worst, x_[v] - hi_[v]);
  }
  return worst;
}

SimplexStatus Simplex::solve(const SimplexOptions& opts) {
  const int m = static_cast<int>(rows_.size());
  x_.assign(ns_, 0.0);
  if (m == 0) {
    obj_ = 0.0;
    for (int v = 0; v < ns_; ++v) {
      x_[v] = cost_[v] > 0 ? lo_[v] : (cost_[v] < 0 ? hi_[v] : lo_[v]);
      obj_ += cost_[v] * x_[v];
    }
    return SimplexStatus::Optimal;
  }

  // working arrays over structurals + one slack per row (+ artificials later)
  std::vector<std::vector<std::pair<int, double>>> col(ns_);
  std::vector<double> b(m), lo = lo_, hi = hi_;
  for (int i = 0; i < m; ++i) {
    b[i] = rows_[i].rhs;
    for (const auto& [v, c] : rows_[i].coef) col[v].push_back({i, c});
  }
  for (int i = 0; i < m; ++i) {
    col.push_back({{i, 1.0}});
    switch (rows_[i].sense) {
      case Sense::Le: lo.push_back(0.0); hi.push_back(kInf); break;
      case Sense::Ge: lo.push_back(-kInf); hi.push_back(0.0); break;
      case Sense::Eq: lo.push_back(0.0); hi.push_back(0.0); break;
    }
  }

  std::vector<double> x(ns_ + m, 0.0);
  for (int v = 0; v < ns_ + m; ++v) {
    if (std::isfinite(lo[v]))
      x[v] = lo[v];
    else if (std::isfinite(hi[v]))
      x[v] = hi[v];
  }

  // crash basis: slacks where the start point allows, artificials elsewhere
  std::vector<double> resid(b);
  for (int v = 0; v < ns_; ++v)
    if (x[v] != 0.0)
      for (const auto& [i, c] : col[v]) resid[i] -= c * x[v];
  std::vector<int> basic(m);
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) {
    const int s = ns_ + i;
    if (resid[i] >= lo[s] && resid[i] <= hi[s]) {
      basic[i] = s;
      x[s] = resid[i];
    } else {
      const int a = static_cast<int>(col.size());
      col.push_back({{i, resid[i] > 0 ? 1.0 : -1.0}});
      lo.push_back(0.0);
      hi.push_back(kInf);
      x.push_back(std::abs(resid[i]));
      basic[i] = a;
      need_phase1 = true;
    }
  }
  const int total = static_cast<int>(col.size());
  std::vector<int> where(total, -1);  // var -> basis row or -1
  for (int i = 0; i < m; ++i) where[basic[i]] = i;

  std::vector<double> binv(static_cast<std::size_t>(m) * m);  // column-major
  std::vector<double> work(m), wcol(m), y(m);

  auto refactor = [&]() -> bool {
    // dense Gauss-Jordan inverse of the basis matrix
    std::vector<double> mat(static_cast<std::size_t>(m) * m, 0.0);  // row-major
    for (int k = 0; k < m; ++k)
      for (const auto& [i, c] : col[basic[k]]) mat[static_cast<std::size_t>(i) * m + k] = c;
    std::fill(binv.begin(), binv.end(), 0.0);
    for (int i = 0; i < m; ++i) binv[static_cast<std::size_t>(i) * m + i] = 1.0;  // temp row-major
    for (int c0 = 0; c0 < m; ++c0) {
      int piv = -1;
      double best = opts.pivot_tol;
      for (int r = c0; r < m; ++r) {
        const double a = std::abs(mat[static_cast<std::size_t>(r) * m + c0]);
        if (a > best) {
          best = a;
          piv = r;
        }
      }
      if (piv < 0) return false;
      if (piv != c0) {
        for (int k = 0; k < m; ++k) {
          std::swap(mat[static_cast<std::size_t>(piv) * m + k],
                    mat[static_cast<std::size_t>(c0) * m + k]);
          std::swap(binv[static_cast<std::size_t>(piv) * m + k],
                    binv[static_cast<std::size_t>(c0) * m + k]);
        }
      }
      const double d = mat[static_cast<std::size_t>(c0) * m + c0];
      for (int k = 0; k < m; ++k) {
        mat[static_cast<std::size_t>(c0) * m + k] /= d;
        binv[static_cast<std::size_t>(c0) * m + k] /= d;
      }
      for (int r = 0; r < m; ++r) {
        if (r == c0) continue;
        const double f = mat[static_cast<std::size_t>(r) * m + c0];
        if (f == 0.0) continue;
        for (int k = 0; k < m; ++k) {
          mat[static_cast<std::size_t>(r) * m + k] -= f * mat[static_cast<std::size_t>(c0) * m + k];
          binv[static_cast<std::size_t>(r) * m + k] -= f * binv[static_cast<std::size_t>(c0) * m + k];
        }
      }
    }
    // transpose row-major inverse into column-major storage
    std::vector<double> tmp(binv);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        binv[static_cast<std::size_t>(k) * m + i] = tmp[static_cast<std::size_t>(i) * m + k];
    return true;
  };

  auto recompute_basics = [&]() {
    std::fill(work.begin(), work.end(), 0.0);
    for (int i = 0; i < m; ++i) work[i] = b[i];
    for (int v = 0; v < total; ++v) {
      if (where[v] >= 0 || x[v] == 0.0) continue;
      for (const auto& [i, c] : col[v]) work[i] -= c * x[v];
    }
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      const double* bc = binv.data();
      for (int k = 0; k < m; ++k) s += bc[static_cast<std::size_t>(k) * m + i] * work[k];
      x[basic[i]] = s;
    }
  };

  auto run_phase = [&](const std::vector<double>& c, bool phase1) -> SimplexStatus {
    long long iter = 0;
    int degen = 0, since_refactor = 0;
    for (;;) {
      if (++iter > opts.iter_limit)
        throw Error(ErrorCode::LimitHit, "simplex iteration limit reached");
      const bool bland = degen > opts.bland_after;

      // duals y = c_B' B^-1
      for (int k = 0; k < m; ++k) {
        double s = 0.0;
        const double* colk = binv.data() + static_cast<std::size_t>(k) * m;
        for (int i = 0; i < m; ++i) s += c[basic[i]] * colk[i];
        y[k] = s;
      }

      int q = -1, dir = 0;
      double best = opts.cost_tol;
      for (int v = 0; v < total; ++v) {
        if (where[v] >= 0) continue;
        if (hi[v] - lo[v] <= 0.0) continue;  // pinned
        double d = c[v];
        for (const auto& [i, cc] : col[v]) d -= y[i] * cc;
        const bool at_lo = std::isfinite(lo[v]) && x[v] <= lo[v] + opts.feas_tol;
        int cand = 0;
        if (at_lo && d < -opts.cost_tol)
          cand = 1;  // increase
        else if (!at_lo && d > opts.cost_tol)
          cand = -1;  // decrease from upper
        if (!cand) continue;
        if (bland) {
          q = v;
          dir = cand;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          q = v;
          dir = cand;
        }
      }
      if (q < 0) return SimplexStatus::Optimal;

      // w = B^-1 a_q
      std::fill(wcol.begin(), wcol.end(), 0.0);
      for (const auto& [i, cc] : col[q]) {
        const double* colk = binv.data() + static_cast<std::size_t>(i) * m;
        for (int r = 0; r < m; ++r) wcol[r] += cc * colk[r];
      }

      double step = hi[q] - lo[q];  // bound-flip cap
      int leave = -1;
      for (int i = 0; i < m; ++i) {
        const double g = dir * wcol[i];
        if (std::abs(g) <= opts.pivot_tol) continue;
        const int bv = basic[i];
        double limit;
        if (g > 0)
          limit = std::isfinite(lo[bv]) ? (x[bv] - lo[bv]) / g : kInf;
        else
          limit = std::isfinite(hi[bv]) ? (x[bv] - hi[bv]) / g : kInf;
        if (limit < -1e-12) limit = 0.0;
        const bool better =
            limit < step - 1e-12 ||
            (limit < step + 1e-12 && leave >= 0 &&
             (bland ? basic[i] < basic[leave] : std::abs(wcol[i]) > std::abs(wcol[leave])));
        if (better) {
          step = std::min(step, std::max(limit, 0.0));
          leave = i;
        }
      }
      if (!std::isfinite(step)) return SimplexStatus::Unbounded;

      if (step > 1e-12)
        degen = 0;
      else
        ++degen;

      // apply the move
      const double delta = dir * step;
      x[q] += delta;
      for (int i = 0; i < m; ++i)
        if (wcol[i] != 0.0) x[basic[i]] -= delta * wcol[i];

      if (leave < 0) continue;  // bound flip, basis unchanged

      const int lv = basic[leave];
      // leaving variable lands exactly on the bound it hit
      x[lv] = dir * wcol[leave] > 0 ? lo[lv] : hi[lv];
      where[lv] = -1;
      basic[leave] = q;
      where[q] = leave;

      const double piv = wcol[leave];
      // eta update column by column: binv <- E binv
      for (int k = 0; k < m; ++k) {
        double* colk = binv.data() + static_cast<std::size_t>(k) * m;
        const double br = colk[leave];
        if (br == 0.0) continue;
        const double f = br / piv;
        for (int r = 0; r < m; ++r) colk[r] -= f * wcol[r];
        colk[leave] = f;
      }

      if (++since_refactor >= opts.refactor_every) {
        since_refactor = 0;
        if (!refactor())
          throw Error(ErrorCode::NumericalFailure, "singular basis during refactorization");
        recompute_basics();
      }
      (void)phase1;
    }
  };

  if (!refactor()) throw Error(ErrorCode::NumericalFailure, "singular initial basis");

  if (need_phase1) {
    std::vector<double> c1(total, 0.0);
    for (int v = ns_ + m; v < total; ++v) c1[v] = 1.0;
    const SimplexStatus st = run_phase(c1, true);
    (void)st;  // phase 1 is bounded below by zero
    double infeas = 0.0;
    for (int v = ns_ + m; v < total; ++v) infeas += x[v];
    if (infeas > opts.feas_tol) {
      for (int v = 0; v < ns_; ++v) x_[v] = x[v];
      return SimplexStatus::Infeasible;
    }
    for (int v = ns_ + m; v < total; ++v) {
      hi[v] = 0.0;
      if (where[v] < 0) x[v] = 0.0;
    }
  }

  std::vector<double> c2(total, 0.0);
  for (int v = 0; v < ns_; ++v) c2[v] = cost_[v];
  const SimplexStatus st = run_phase(c2, false);

  // refinement: fresh inverse and recomputed basic values
  if (!refactor()) throw Error(ErrorCode::NumericalFailure, "singular basis at optimum");
  recompute_basics();

  for (int v = 0; v < ns_; ++v) x_[v] = x[v];
  obj_ = 0.0;
  for (int v = 0; v < ns_; ++v) obj_ += cost_[v] * x_[v];
  return st;
}

}  // namespace mcp
