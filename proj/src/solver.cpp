#include "mcp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "mcp/preprocess.hpp"

namespace mcp {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::NodeLimit: return "NodeLimit";
    case SolveStatus::TimeLimit: return "TimeLimit";
  }
  return "?";
}

double lp_gap_percent(int optimum, double lp_value) {
  if (optimum <= 0) return 0.0;
  const double lp_ceil = std::ceil(lp_value - 1e-6);
  return 100.0 * (optimum - lp_ceil) / optimum;
}

namespace {

struct LpRun {
  LpStatus status = LpStatus::Optimal;
  double value = 0.0;
  std::vector<double> x;
};

double row_violation(const Row& row, const std::vector<double>& x) {
  double lhs = 0.0;
  for (const auto& [v, c] : row.coef) lhs += c * x[v];
  switch (row.sense) {
    case Sense::Eq: return std::abs(lhs - row.rhs);
    case Sense::Le: return lhs - row.rhs;
    case Sense::Ge: return row.rhs - lhs;
  }
  return 0.0;
}

// Solves the relaxation over the active rows, activating violated lazy rows
// until the solution satisfies the full model.
LpRun run_lp(const Model& m, const std::vector<double>& lb, const std::vector<double>& ub,
             std::vector<char>& lazy_active) {
  std::vector<char> is_lazy(m.rows.size(), 0);
  for (int r : m.lazy_rows) is_lazy[r] = 1;
  for (;;) {
    Simplex sx(m.num_vars);
    for (int v = 0; v < m.num_vars; ++v) {
      sx.set_cost(v, m.objective[v]);
      sx.set_bounds(v, lb[v], ub[v]);
    }
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      if (!is_lazy[r] || lazy_active[r])
        sx.add_row(m.rows[r].coef, m.rows[r].sense, m.rows[r].rhs);

    const SimplexStatus st = sx.solve();
    LpRun out;
    if (st == SimplexStatus::Infeasible) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    if (st == SimplexStatus::Unbounded) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    if (sx.max_residual() > 1e-4)
      throw Error(ErrorCode::NumericalFailure, "LP residual above 1e-4 after refinement");

    out.x.resize(m.num_vars);
    for (int v = 0; v < m.num_vars; ++v) out.x[v] = sx.value(v);
    out.value = sx.objective();

    bool added = false;
    for (int r : m.lazy_rows) {
      if (lazy_active[r]) continue;
      if (row_violation(m.rows[r], out.x) > 1e-6) {
        lazy_active[r] = 1;
        added = true;
      }
    }
    if (!added) return out;
  }
}

void base_bounds(const Model& m, std::vector<double>& lb, std::vector<double>& ub) {
  lb.assign(m.num_vars, 0.0);
  ub.assign(m.num_vars, 1.0);
  for (int v = 0; v < m.num_vars; ++v)
    if (m.fixed[v] >= 0) lb[v] = ub[v] = m.fixed[v];
}

bool integral_solution(const std::vector<double>& x) {
  for (double v : x)
    if (std::abs(v - std::llround(v)) > 1e-6) return false;
  return true;
}

// exact integer check of every model row for a 0/1 assignment
bool satisfies_exactly(const Model& m, const std::vector<char>& sel) {
  for (const Row& row : m.rows) {
    long long lhs = 0;
    for (const auto& [v, c] : row.coef)
      if (sel[v]) lhs += std::llround(c);
    switch (row.sense) {
      case Sense::Eq:
        if (lhs != std::llround(row.rhs)) return false;
        break;
      case Sense::Le:
        if (static_cast<double>(lhs) > row.rhs + 1e-9) return false;
        break;
      case Sense::Ge:
        if (static_cast<double>(lhs) < row.rhs - 1e-9) return false;
        break;
    }
  }
  return true;
}

}  // namespace

LPResult solve_lp(const Model& m) {
  std::vector<double> lb, ub;
  base_bounds(m, lb, ub);
  std::vector<char> lazy_active(m.rows.size(), 0);
  const LpRun run = run_lp(m, lb, ub, lazy_active);
  LPResult res;
  res.status = run.status;
  res.value = run.value;
  res.solution.values = run.x;
  res.solution.objective_value = run.value;
  return res;
}

SolveResult solve_ip(const Model& m, const SolveLimits& limits, const WarmStart* warm) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  SolveResult res;
  std::vector<double> lb0, ub0;
  base_bounds(m, lb0, ub0);
  std::vector<char> lazy_active(m.rows.size(), 0);

  int best_obj = std::numeric_limits<int>::max();
  std::vector<int> best_chosen;
  // a value-only warm start cannot be returned as a variable assignment, so
  // nodes matching it are still explored until an in-tree incumbent exists
  int cutoff = std::numeric_limits<int>::max();
  if (warm) {
    if (!warm->chosen.empty()) {
      best_obj = warm->upper_bound;
      best_chosen = warm->chosen;
      cutoff = best_obj;
    } else if (warm->upper_bound < std::numeric_limits<int>::max()) {
      cutoff = warm->upper_bound + 1;
    }
  }

  struct Node {
    std::vector<std::pair<int, int>> fixings;
    int bound;
  };
  std::vector<Node> stack;
  stack.push_back(Node{{}, limits.bound_floor});

  long long processed = 0;
  int open_min_bound = std::numeric_limits<int>::max();
  bool limit_hit = false;

  while (!stack.empty()) {
    if (processed - 1 >= limits.node_limit) {
      res.status = SolveStatus::NodeLimit;
      limit_hit = true;
      break;
    }
    if (elapsed() > limits.time_limit_s) {
      res.status = SolveStatus::TimeLimit;
      limit_hit = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    if (processed > 0 && node.bound >= cutoff) continue;  // the root always defines lp_root_value
    ++processed;

    std::vector<double> lb = lb0, ub = ub0;
    for (const auto& [v, val] : node.fixings) lb[v] = ub[v] = val;

    const LpRun lp = run_lp(m, lb, ub, lazy_active);
    if (processed == 1) {
      if (lp.status == LpStatus::Infeasible) {
        res.status = SolveStatus::Infeasible;
        res.wall_time_s = elapsed();
        return res;
      }
      res.lp_root_value = lp.value;
    }
    if (lp.status != LpStatus::Optimal) continue;

    const int bound = std::max(static_cast<int>(std::ceil(lp.value - 1e-6)), limits.bound_floor);
    if (bound >= cutoff) continue;

    if (integral_solution(lp.x)) {
      std::vector<char> sel(m.num_vars, 0);
      std::vector<int> chosen;
      for (int v = 0; v < m.num_vars; ++v)
        if (std::llround(lp.x[v]) == 1) {
          sel[v] = 1;
          chosen.push_back(v);
        }
      if (satisfies_exactly(m, sel)) {
        const int obj = static_cast<int>(std::llround(lp.value));
        if (obj < best_obj) {
          best_obj = obj;
          best_chosen = std::move(chosen);
          cutoff = best_obj;
        }
        continue;
      }
    }

    // most fractional variable, ties to the smallest index
    int branch_var = -1;
    double best_frac = 2.0;
    for (int v = 0; v < m.num_vars; ++v) {
      if (ub[v] - lb[v] <= 0.0) continue;
      const double f = std::abs(lp.x[v] - 0.5);
      if (f < best_frac - 1e-12) {
        best_frac = f;
        branch_var = v;
      }
    }
    if (branch_var < 0) continue;  // numerically stuck; bound already handled

    Node up{node.fixings, bound};
    up.fixings.push_back({branch_var, 1});
    Node down{std::move(node.fixings), bound};
    down.fixings.push_back({branch_var, 0});
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // down branch explored first
  }

  if (limit_hit)
    for (const Node& n : stack) open_min_bound = std::min(open_min_bound, n.bound);

  res.nodes_explored = std::max<long long>(0, processed - 1);
  res.wall_time_s = elapsed();
  if (!limit_hit) {
    if (best_obj == std::numeric_limits<int>::max()) {
      res.status = SolveStatus::Infeasible;
      return res;
    }
    res.status = SolveStatus::Optimal;
    res.objective = best_obj;
    res.chosen = best_chosen;
    res.best_bound = best_obj;
    return res;
  }
  if (best_obj < std::numeric_limits<int>::max()) {
    res.objective = best_obj;
    res.chosen = best_chosen;
  }
  res.best_bound = std::min(open_min_bound,
                            best_obj == std::numeric_limits<int>::max() ? open_min_bound : best_obj);
  return res;
}

// ---- greedy triangulation + merging -----------------------------------

namespace {

std::vector<int> canonical_ring(std::vector<int> ring) {
  auto start = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), start, ring.end());
  return ring;
}

std::vector<Face> fan_triangulation(const Instance& inst) {
  const int n = inst.n();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(inst.pt(a), inst.pt(b)); });

  std::vector<Face> tris;
  std::vector<int> done;
  std::vector<Point> done_pts;
  std::vector<int> ring;  // hull of processed points, empty while collinear
  bool collinear = true;

  auto add_triangle = [&](int a, int b, int c) {
    std::vector<int> t = orient(inst.pt(a), inst.pt(b), inst.pt(c)) > 0
                             ? std::vector<int>{a, b, c}
                             : std::vector<int>{b, a, c};
    tris.push_back(Face{canonical_ring(std::move(t))});
  };

  for (int id : order) {
    if (collinear && done.size() >= 2 &&
        orient(inst.pt(done[0]), inst.pt(done[1]), inst.pt(id)) != 0) {
      for (std::size_t k = 0; k + 1 < done.size(); ++k)
        add_triangle(done[k], done[k + 1], id);
      collinear = false;
    } else if (!collinear) {
      const int h = static_cast<int>(ring.size());
      for (int e = 0; e < h; ++e) {
        const int u = ring[e], v = ring[(e + 1) % h];
        if (orient(inst.pt(u), inst.pt(v), inst.pt(id)) < 0) add_triangle(u, id, v);
      }
    }
    done.push_back(id);
    done_pts.push_back(inst.pt(id));
    if (!collinear) ring = convex_hull(done_pts).first;
  }
  return tris;
}

}  // namespace

Partition greedy_partition(const Instance& inst) {
  std::vector<Face> faces = fan_triangulation(inst);
  std::vector<char> alive(faces.size(), 1);

  bool merged = true;
  while (merged) {
    merged = false;
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!alive[f]) continue;
      const auto& ring = faces[f].ring;
      const int k = static_cast<int>(ring.size());
      for (int e = 0; e < k; ++e)
        by_edge[std::minmax(ring[e], ring[(e + 1) % k])].push_back(f);
    }
    for (const auto& [edge, users] : by_edge) {
      if (users.size() != 2) continue;
      const int f = users[0], g = users[1];
      if (!alive[f] || !alive[g]) continue;
      bool ok;
      try {
        ok = union_is_convex(inst, faces[f], faces[g], edge);
      } catch (const Error&) {
        ok = false;  // shares more than one edge
      }
      if (!ok) continue;
      faces.push_back(Face{merge_rings(faces[f], faces[g], edge)});
      alive[f] = alive[g] = 0;
      alive.push_back(1);
      merged = true;
      break;
    }
  }

  Partition part;
  part.source = "greedy";
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (alive[f]) part.faces.push_back(faces[f]);
  std::sort(part.faces.begin(), part.faces.end());
  return part;
}

// ---- exhaustive tiling search ------------------------------------------

namespace {

struct TilingEngine {
  const Instance& inst;
  const FaceCatalog& cat;
  std::vector<std::pair<int, int>> arc_keys;
  std::vector<const ArcSides*> arc_sides;
  std::vector<char> is_hull;
  std::vector<Side> hull_interior;
  std::map<std::pair<int, int>, int> arc_index;
  std::vector<char> used_r, used_l;
  // per arc, candidate faces ordered by decreasing area so the first descent
  // reaches a small tiling and pruning has a strong incumbent early
  std::vector<std::vector<int>> cand_r, cand_l;
  std::vector<std::vector<std::pair<int, Side>>> face_edges;  // arc idx + face side
  std::vector<Wide> face_area;
  Wide hull_area = 0, covered = 0, max_area = 1;
  std::vector<int> current;

  long long nodes = 0;
  long long node_limit = std::numeric_limits<long long>::max();
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  bool hit_node_limit = false, hit_time_limit = false;

  int best = std::numeric_limits<int>::max();
  std::vector<int> best_faces;
  bool collect_all = false;
  std::size_t max_collect = 0;
  std::vector<std::vector<int>>* sink = nullptr;

  explicit TilingEngine(const Instance& in, const FaceCatalog& c) : inst(in), cat(c) {
    for (const auto& [key, sides] : cat.arcs) {
      arc_index[key] = static_cast<int>(arc_keys.size());
      arc_keys.push_back(key);
      arc_sides.push_back(&sides);
      const bool hull = inst.hull_adjacent(key.first, key.second);
      is_hull.push_back(hull);
      if (hull) {
        const ArcKey arc = inst.arc(key.first, key.second);
        const int u = key.first;
        // ring direction u->v puts the interior on the paper-Right of an
        // aligned arc, on the Left otherwise
        const int pu = inst.hull_pos[u];
        const int h = static_cast<int>(inst.hull_ring.size());
        const bool forward = inst.hull_ring[(pu + 1) % h] == key.second;
        const int tail = forward ? u : key.second;
        hull_interior.push_back(arc.i == tail ? Side::Right : Side::Left);
      } else {
        hull_interior.push_back(Side::Right);
      }
    }
    used_r.assign(arc_keys.size(), 0);
    used_l.assign(arc_keys.size(), 0);

    face_edges.resize(cat.faces.size());
    face_area.resize(cat.faces.size());
    for (int f = 0; f < static_cast<int>(cat.faces.size()); ++f) {
      const auto& ring = cat.faces[f].ring;
      const int k = static_cast<int>(ring.size());
      std::vector<Point> pts;
      pts.reserve(k);
      for (int id : ring) pts.push_back(inst.pt(id));
      face_area[f] = ring_doubled_area(pts);
      max_area = std::max(max_area, face_area[f]);
      for (int e = 0; e < k; ++e) {
        const int u = ring[e], v = ring[(e + 1) % k];
        face_edges[f].push_back({arc_index.at(std::minmax(u, v)),
                                 face_side(inst, cat.faces[f], u, v)});
      }
    }
    std::vector<Point> hull_pts;
    for (int id : inst.hull_ring) hull_pts.push_back(inst.pt(id));
    hull_area = ring_doubled_area(hull_pts);

    cand_r.resize(arc_keys.size());
    cand_l.resize(arc_keys.size());
    auto by_area = [&](std::vector<int> ids) {
      std::stable_sort(ids.begin(), ids.end(),
                       [&](int a, int b) { return face_area[a] > face_area[b]; });
      return ids;
    };
    for (std::size_t a = 0; a < arc_keys.size(); ++a) {
      cand_r[a] = by_area(arc_sides[a]->right);
      cand_l[a] = by_area(arc_sides[a]->left);
    }
  }

  bool limits_ok() {
    if (++nodes > node_limit) {
      hit_node_limit = true;
      return false;
    }
    if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
      hit_time_limit = true;
      return false;
    }
    return true;
  }

  // first arc with an unmet side, scanning in key order
  int next_slot(Side& need) const {
    for (int a = 0; a < static_cast<int>(arc_keys.size()); ++a) {
      if (is_hull[a]) {
        const char used = hull_interior[a] == Side::Right ? used_r[a] : used_l[a];
        if (!used) {
          need = hull_interior[a];
          return a;
        }
      } else if (used_r[a] != used_l[a]) {
        need = used_r[a] ? Side::Left : Side::Right;
        return a;
      }
    }
    return -1;
  }

  bool placeable(int f) const {
    for (const auto& [a, side] : face_edges[f])
      if (side == Side::Right ? used_r[a] : used_l[a]) return false;
    return true;
  }

  void place(int f, bool on) {
    for (const auto& [a, side] : face_edges[f]) {
      char& slot = side == Side::Right ? used_r[a] : used_l[a];
      slot = on;
    }
    covered += on ? face_area[f] : -face_area[f];
  }

  void dfs() {
    if (hit_node_limit || hit_time_limit) return;
    Side need;
    const int slot = next_slot(need);
    if (slot < 0) {
      if (covered != hull_area) return;
      if (collect_all) {
        if (sink->size() < max_collect) {
          std::vector<int> sol = current;
          std::sort(sol.begin(), sol.end());
          sink->push_back(std::move(sol));
        }
        return;
      }
      if (static_cast<int>(current.size()) < best) {
        best = static_cast<int>(current.size());
        best_faces = current;
        std::sort(best_faces.begin(), best_faces.end());
      }
      return;
    }
    if (!collect_all) {
      const Wide rem = hull_area - covered;
      Wide lower = current.size();
      if (rem > 0) lower += (rem + max_area - 1) / max_area;
      if (lower >= best) return;
    }
    const auto& sides = *arc_sides[slot];
    const auto& candidates = need == Side::Right ? sides.right : sides.left;
    for (int f : candidates) {
      if (!placeable(f)) continue;
      if (!limits_ok()) return;
      place(f, true);
      current.push_back(f);
      dfs();
      current.pop_back();
      place(f, false);
      if (hit_node_limit || hit_time_limit) return;
    }
  }
};

}  // namespace

SolveResult exact_cover_oracle(const Instance& inst, const FaceCatalog& cat,
                               const SolveLimits& limits, int max_points) {
  if (inst.n() > max_points)
    throw Error(ErrorCode::TooLarge,
                "exact_cover_oracle: instance exceeds " + std::to_string(max_points) + " points");
  const auto t0 = std::chrono::steady_clock::now();
  TilingEngine engine(inst, cat);
  engine.node_limit = limits.node_limit;
  engine.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(limits.time_limit_s));
  engine.dfs();

  SolveResult res;
  res.nodes_explored = engine.nodes;
  res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (engine.hit_node_limit)
    res.status = SolveStatus::NodeLimit;
  else if (engine.hit_time_limit)
    res.status = SolveStatus::TimeLimit;
  else if (engine.best == std::numeric_limits<int>::max())
    res.status = SolveStatus::Infeasible;
  else
    res.status = SolveStatus::Optimal;
  if (engine.best < std::numeric_limits<int>::max()) {
    res.objective = engine.best;
    res.chosen = engine.best_faces;
    res.best_bound = res.status == SolveStatus::Optimal ? engine.best : 1;
  }
  return res;
}

std::vector<std::vector<int>> enumerate_tilings(const Instance& inst, const FaceCatalog& cat,
                                                std::size_t max_count) {
  TilingEngine engine(inst, cat);
  std::vector<std::vector<int>> out;
  engine.collect_all = true;
  engine.max_collect = max_count;
  engine.sink = &out;
  engine.dfs();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcp
