#include "mcp/preprocess.hpp"

#include <algorithm>
#include <set>

namespace mcp {

namespace {

std::set<std::pair<int, int>> edge_set(const Face& f) {
  std::set<std::pair<int, int>> edges;
  const int k = static_cast<int>(f.ring.size());
  for (int i = 0; i < k; ++i) edges.insert(std::minmax(f.ring[i], f.ring[(i + 1) % k]));
  return edges;
}

int shared_edge_count(const Face& f1, const Face& f2) {
  const auto e1 = edge_set(f1);
  int shared = 0;
  const int k = static_cast<int>(f2.ring.size());
  for (int i = 0; i < k; ++i)
    if (e1.count(std::minmax(f2.ring[i], f2.ring[(i + 1) % k]))) ++shared;
  return shared;
}

// position of directed edge u->v in the ring, or -1
int edge_pos(const std::vector<int>& ring, int u, int v) {
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i)
    if (ring[i] == u && ring[(i + 1) % k] == v) return i;
  return -1;
}

}  // namespace

std::vector<int> merge_rings(const Face& f1, const Face& f2, std::pair<int, int> shared_edge) {
  const auto [u, v] = shared_edge;
  int p1 = edge_pos(f1.ring, u, v);
  const Face* a = &f1;
  const Face* b = &f2;
  if (p1 < 0) {
    p1 = edge_pos(f2.ring, u, v);
    std::swap(a, b);
  }
  // a holds u->v at p1, b holds v->u
  const int k1 = static_cast<int>(a->ring.size());
  const int k2 = static_cast<int>(b->ring.size());
  const int p2 = edge_pos(b->ring, a->ring[(p1 + 1) % k1], a->ring[p1]);

  std::vector<int> merged;
  merged.reserve(k1 + k2 - 2);
  for (int i = 0; i < k1; ++i) merged.push_back(a->ring[(p1 + 1 + i) % k1]);
  for (int i = 2; i < k2; ++i) merged.push_back(b->ring[(p2 + i) % k2]);

  auto start = std::min_element(merged.begin(), merged.end());
  std::rotate(merged.begin(), start, merged.end());
  return merged;
}

bool union_is_convex(const Instance& inst, const Face& f1, const Face& f2,
                     std::pair<int, int> shared_edge) {
  shared_edge = std::minmax(shared_edge.first, shared_edge.second);
  const auto e1 = edge_set(f1);
  const auto e2 = edge_set(f2);
  std::vector<std::pair<int, int>> shared;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
  if (shared.size() != 1 || shared.front() != shared_edge)
    throw Error(ErrorCode::NotAdjacent, "faces are not adjacent exactly along the given edge");

  const std::vector<int> merged = merge_rings(f1, f2, shared_edge);
  std::vector<Point> ring;
  ring.reserve(merged.size());
  for (int id : merged) ring.push_back(inst.pt(id));
  return polygon_is_weakly_convex(ring);
}

bool union_is_convex(const Instance& inst, const Face& f1, const Face& f2) {
  const auto e1 = edge_set(f1);
  const auto e2 = edge_set(f2);
  std::vector<std::pair<int, int>> shared;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
  if (shared.size() != 1)
    throw Error(ErrorCode::NotAdjacent, "faces share " + std::to_string(shared.size()) +
                                            " edges, expected exactly 1");
  return union_is_convex(inst, f1, f2, shared.front());
}

namespace {

// union check used by the pruning passes: pairs sharing more than one edge
// never merge into a face, count them as non-convex
bool prunable_union(const Instance& inst, const Face& f1, const Face& f2,
                    std::pair<int, int> edge) {
  if (shared_edge_count(f1, f2) != 1) return false;
  return union_is_convex(inst, f1, f2, edge);
}

}  // namespace

FaceCatalog prune_dominated(const FaceCatalog& cat, const Instance& inst,
                            const PreprocessOptions& opts) {
  std::vector<char> alive(cat.faces.size(), 1);
  auto alive_of = [&](const std::vector<int>& ids) {
    std::vector<int> out;
    for (int f : ids)
      if (alive[f]) out.push_back(f);
    return out;
  };

  // pass (a): dominated edges; hull edges are never candidates
  for (const auto& [key, sides] : cat.arcs) {
    if (inst.hull_adjacent(key.first, key.second)) continue;
    const std::vector<int> right = alive_of(sides.right);
    const std::vector<int> left = alive_of(sides.left);
    if (right.empty() && left.empty()) continue;
    if (static_cast<int>(std::min(right.size(), left.size())) > opts.pair_limit) continue;
    bool all_convex = true;
    for (int r : right) {
      for (int l : left) {
        if (!prunable_union(inst, cat.faces[r], cat.faces[l], key)) {
          all_convex = false;
          break;
        }
      }
      if (!all_convex) break;
    }
    if (all_convex) {
      for (int f : right) alive[f] = 0;
      for (int f : left) alive[f] = 0;
    }
  }

  // pass (b): dominated faces edge by edge
  for (int f = 0; f < static_cast<int>(cat.faces.size()); ++f) {
    if (!alive[f]) continue;
    const auto& ring = cat.faces[f].ring;
    const int k = static_cast<int>(ring.size());
    for (int e = 0; e < k && alive[f]; ++e) {
      const int u = ring[e], v = ring[(e + 1) % k];
      if (inst.hull_adjacent(u, v)) continue;
      const auto key = std::minmax(u, v);
      const ArcSides& sides = cat.arcs.at(key);
      const Side mine = face_side(inst, cat.faces[f], u, v);
      const std::vector<int> opp =
          alive_of(mine == Side::Right ? sides.left : sides.right);
      if (opp.empty()) {
        alive[f] = 0;  // internal edge with no possible partner
        break;
      }
      bool all_convex = true;
      for (int g : opp) {
        if (!prunable_union(inst, cat.faces[f], cat.faces[g], key)) {
          all_convex = false;
          break;
        }
      }
      if (all_convex) alive[f] = 0;
    }
  }

  // pass (c): chords between non-consecutive hull vertices
  for (const auto& [key, sides] : cat.arcs) {
    if (!inst.on_hull(key.first) || !inst.on_hull(key.second)) continue;
    if (inst.hull_adjacent(key.first, key.second)) continue;
    for (int f : sides.right) alive[f] = 0;
    for (int f : sides.left) alive[f] = 0;
  }

  std::vector<Face> kept;
  for (std::size_t f = 0; f < cat.faces.size(); ++f)
    if (alive[f]) kept.push_back(cat.faces[f]);
  return make_catalog(inst, std::move(kept));
}

std::vector<int> find_mandatory(const FaceCatalog& cat, const Instance& inst) {
  std::vector<int> mandatory;
  const int h = static_cast<int>(inst.hull_ring.size());
  for (int e = 0; e < h; ++e) {
    const int u = inst.hull_ring[e], v = inst.hull_ring[(e + 1) % h];
    const ArcSides* sides = cat.find_edge(u, v);
    const ArcKey arc = inst.arc(u, v);
    const std::vector<int>* interior =
        sides ? (arc.i == u ? &sides->right : &sides->left) : nullptr;
    if (!interior || interior->empty())
      throw Error(ErrorCode::Infeasible,
                  "hull edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} has no interior-side face");
    if (interior->size() == 1) mandatory.push_back(interior->front());
  }
  std::sort(mandatory.begin(), mandatory.end());
  mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());
  return mandatory;
}

}  // namespace mcp
