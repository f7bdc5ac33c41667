#include "mcp/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>

namespace mcp {

Model build_face_model(const FaceCatalog& cat, const Instance& inst, const DegreeBounds& db,
                       const std::vector<int>& mandatory) {
  Model m;
  m.num_vars = static_cast<int>(cat.faces.size());
  m.objective.assign(m.num_vars, 1.0);
  m.integral.assign(m.num_vars, true);
  m.fixed.assign(m.num_vars, -1);
  m.var_meta.resize(m.num_vars);
  for (int f = 0; f < m.num_vars; ++f) m.var_meta[f].face_id = f;

  for (const auto& [key, sides] : cat.arcs) {
    const bool hull_edge = inst.hull_adjacent(key.first, key.second);
    Row row;
    row.sense = Sense::Eq;
    for (int f : sides.left) row.coef.push_back({f, 1.0});
    for (int f : sides.right) row.coef.push_back({f, -1.0});
    std::sort(row.coef.begin(), row.coef.end());
    if (hull_edge) {
      if (!sides.left.empty() && sides.right.empty())
        row.rhs = 1.0;
      else if (!sides.right.empty() && sides.left.empty())
        row.rhs = -1.0;
      else
        throw Error(ErrorCode::Infeasible,
                    "hull edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                        "} has no interior-side face");
    } else {
      row.rhs = 0.0;
    }
    m.rows.push_back(std::move(row));
  }
  // every hull edge must carry a row
  const int h = static_cast<int>(inst.hull_ring.size());
  for (int e = 0; e < h; ++e) {
    const int u = inst.hull_ring[e], v = inst.hull_ring[(e + 1) % h];
    if (!cat.find_edge(u, v))
      throw Error(ErrorCode::Infeasible, "hull edge {" + std::to_string(u) + "," +
                                             std::to_string(v) + "} has no interior-side face");
  }

  // a point of edge degree d touches d faces when interior, d-1 on the hull
  std::vector<std::vector<int>> at_point(inst.n());
  for (int f = 0; f < m.num_vars; ++f)
    for (int id : cat.faces[f].ring) at_point[id].push_back(f);
  for (int id = 0; id < inst.n(); ++id) {
    Row row;
    row.sense = Sense::Ge;
    row.rhs = inst.on_hull(id) ? std::max(1, db.d[id] - 1) : db.d[id];
    for (int f : at_point[id]) row.coef.push_back({f, 1.0});
    m.rows.push_back(std::move(row));
  }

  for (int f : mandatory) m.fixed[f] = 1;
  return m;
}

Model build_edge_model(const Instance& inst) {
  const int n = inst.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (orient(inst.pt(a), inst.pt(b), inst.pt(c)) == 0)
          throw Error(ErrorCode::CollinearInput, "points " + std::to_string(a) + "," +
                                                     std::to_string(b) + "," + std::to_string(c) +
                                                     " are collinear");

  Model m;
  std::vector<std::vector<int>> var_of(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      var_of[a][b] = var_of[b][a] = m.num_vars;
      VarMeta meta;
      meta.edge_i = a;
      meta.edge_j = b;
      m.var_meta.push_back(meta);
      ++m.num_vars;
    }
  m.objective.assign(m.num_vars, 1.0);
  m.integral.assign(m.num_vars, true);
  m.fixed.assign(m.num_vars, -1);

  // crossing pairs, activated lazily by the solver
  for (int v1 = 0; v1 < m.num_vars; ++v1) {
    const auto [a, b] = std::pair(m.var_meta[v1].edge_i, m.var_meta[v1].edge_j);
    for (int v2 = v1 + 1; v2 < m.num_vars; ++v2) {
      const auto [c, d] = std::pair(m.var_meta[v2].edge_i, m.var_meta[v2].edge_j);
      if (a == c || a == d || b == c || b == d) continue;
      if (!segments_properly_cross(inst.pt(a), inst.pt(b), inst.pt(c), inst.pt(d))) continue;
      Row row;
      row.sense = Sense::Le;
      row.rhs = 1.0;
      row.coef = {{v1, 1.0}, {v2, 1.0}};
      m.lazy_rows.push_back(static_cast<int>(m.rows.size()));
      m.rows.push_back(std::move(row));
    }
  }

  const int h = static_cast<int>(inst.hull_ring.size());
  for (int e = 0; e < h; ++e)
    m.fixed[var_of[inst.hull_ring[e]][inst.hull_ring[(e + 1) % h]]] = 1;

  // local convexity: for every ray i->j out of an interior point, some edge
  // strictly left of it must be selected
  for (int i : inst.interior_ids) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Row row;
      row.sense = Sense::Ge;
      row.rhs = 1.0;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (orient(inst.pt(i), inst.pt(j), inst.pt(k)) < 0) row.coef.push_back({var_of[i][k], 1.0});
      }
      std::sort(row.coef.begin(), row.coef.end());
      m.rows.push_back(std::move(row));
    }
  }

  for (int i : inst.interior_ids) {
    Row row;
    row.sense = Sense::Ge;
    row.rhs = 3.0;
    for (int j = 0; j < n; ++j)
      if (j != i) row.coef.push_back({var_of[i][j], 1.0});
    std::sort(row.coef.begin(), row.coef.end());
    m.rows.push_back(std::move(row));
  }
  return m;
}

bool faces_conflict(const Instance& inst, const Face& a, const Face& b) {
  // separating-axis test over both edge sets; contact along an axis counts
  // as separated, so shared edges and vertices are not conflicts
  auto separated_by_edges_of = [&](const Face& f, const Face& g) {
    const int k = static_cast<int>(f.ring.size());
    for (int e = 0; e < k; ++e) {
      const Point& u = inst.pt(f.ring[e]);
      const Point& v = inst.pt(f.ring[(e + 1) % k]);
      bool all_outside = true;
      for (int id : g.ring) {
        if (orient(u, v, inst.pt(id)) > 0) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

namespace {

constexpr double kCutViolation = 1e-4;

std::vector<int> active_faces(const FractionalSolution& frac) {
  std::vector<int> ids;
  for (int f = 0; f < static_cast<int>(frac.values.size()); ++f)
    if (frac.values[f] > kCutViolation) ids.push_back(f);
  return ids;
}

Row clique_row(const std::vector<int>& clique) {
  Row row;
  row.sense = Sense::Le;
  row.rhs = 1.0;
  for (int f : clique) row.coef.push_back({f, 1.0});
  std::sort(row.coef.begin(), row.coef.end());
  return row;
}

}  // namespace

std::vector<Row> separate_clique(const FaceCatalog& cat, const Instance& inst,
                                 const FractionalSolution& frac) {
  std::vector<int> ids = active_faces(frac);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](int a, int b) { return frac.values[a] > frac.values[b]; });

  std::vector<Row> cuts;
  std::set<std::vector<int>> seen;
  for (std::size_t s = 0; s < ids.size(); ++s) {
    std::vector<int> clique{ids[s]};
    double sum = frac.values[ids[s]];
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (t == s) continue;
      const int g = ids[t];
      bool ok = true;
      for (int f : clique)
        if (f == g || !faces_conflict(inst, cat.faces[f], cat.faces[g])) {
          ok = false;
          break;
        }
      if (ok) {
        clique.push_back(g);
        sum += frac.values[g];
      }
    }
    if (clique.size() < 2 || sum <= 1.0 + kCutViolation) continue;
    std::sort(clique.begin(), clique.end());
    if (seen.insert(clique).second) cuts.push_back(clique_row(clique));
  }
  return cuts;
}

std::vector<Row> separate_odd_cycle(const FaceCatalog& cat, const Instance& inst,
                                    const FractionalSolution& frac) {
  const std::vector<int> ids = active_faces(frac);
  const int k = static_cast<int>(ids.size());
  std::vector<std::vector<int>> adj(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (faces_conflict(inst, cat.faces[ids[a]], cat.faces[ids[b]])) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }

  // odd cycle through v = shortest path v0 -> v1 in the bipartite doubling,
  // edge weight max(0, 1 - x_u - x_v); violated iff length < 1
  auto weight = [&](int a, int b) {
    return std::max(0.0, 1.0 - frac.values[ids[a]] - frac.values[ids[b]]);
  };
  std::vector<Row> cuts;
  std::set<std::vector<int>> seen;
  const int nodes = 2 * k;
  for (int src = 0; src < k; ++src) {
    std::vector<double> dist(nodes, std::numeric_limits<double>::infinity());
    std::vector<int> parent(nodes, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[2 * src] = 0.0;
    heap.push({0.0, 2 * src});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u] + 1e-12) continue;
      const int uv = u / 2, up = u % 2;
      for (int wv : adj[uv]) {
        const int w = 2 * wv + (1 - up);
        const double nd = d + weight(uv, wv);
        if (nd + 1e-12 < dist[w]) {
          dist[w] = nd;
          parent[w] = u;
          heap.push({nd, w});
        }
      }
    }
    if (dist[2 * src + 1] >= 1.0 - kCutViolation) continue;
    std::vector<int> walk;  // indices into ids, src at both ends
    for (int u = 2 * src + 1; u != -1; u = parent[u]) walk.push_back(u / 2);
    if (walk.size() < 4 || walk.front() != src || walk.back() != src) continue;
    walk.pop_back();
    const std::set<int> uniq(walk.begin(), walk.end());
    if (uniq.size() != walk.size() || walk.size() % 2 == 0) continue;
    std::vector<int> cycle;
    cycle.reserve(walk.size());
    for (int c : walk) cycle.push_back(ids[c]);
    std::sort(cycle.begin(), cycle.end());
    if (!seen.insert(cycle).second) continue;
    Row row;
    row.sense = Sense::Le;
    row.rhs = (static_cast<double>(cycle.size()) - 1.0) / 2.0;
    for (int f : cycle) row.coef.push_back({f, 1.0});
    std::sort(row.coef.begin(), row.coef.end());
    cuts.push_back(std::move(row));
  }
  return cuts;
}

std::string lp_var_name(const Model& m, int var) {
  const VarMeta& meta = m.var_meta[var];
  if (meta.face_id >= 0) return "f" + std::to_string(meta.face_id);
  if (meta.edge_i >= 0)
    return "e" + std::to_string(meta.edge_i) + "_" + std::to_string(meta.edge_j);
  return "x" + std::to_string(var);
}

void export_lp(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);

  auto coef_str = [](double c) {
    const long long r = std::llround(c);
    if (std::abs(c - r) < 1e-12) return std::to_string(r);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", c);
    return std::string(buf);
  };
  auto rhs_str = [&](double v) { return coef_str(v); };

  out << "Minimize\n obj:";
  int per_line = 0;
  for (int v = 0; v < m.num_vars; ++v) {
    if (m.objective[v] == 0.0) continue;
    out << " + " << coef_str(m.objective[v]) << " " << lp_var_name(m, v);
    if (++per_line % 8 == 0) out << "\n     ";
  }
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const Row& row = m.rows[r];
    out << " c" << r << ":";
    per_line = 0;
    for (const auto& [v, c] : row.coef) {
      out << (c >= 0 ? " + " : " - ") << coef_str(std::abs(c)) << " " << lp_var_name(m, v);
      if (++per_line % 8 == 0) out << "\n     ";
    }
    switch (row.sense) {
      case Sense::Eq: out << " = "; break;
      case Sense::Le: out << " <= "; break;
      case Sense::Ge: out << " >= "; break;
    }
    out << rhs_str(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (int v = 0; v < m.num_vars; ++v) {
    if (m.fixed[v] >= 0)
      out << " " << lp_var_name(m, v) << " = " << m.fixed[v] << "\n";
    else
      out << " 0 <= " << lp_var_name(m, v) << " <= 1\n";
  }
  out << "Binaries\n";
  per_line = 0;
  for (int v = 0; v < m.num_vars; ++v) {
    if (!m.integral[v]) continue;
    out << " " << lp_var_name(m, v);
    if (++per_line % 16 == 0) out << "\n";
  }
  out << "\nEnd\n";
}

}  // namespace mcp
