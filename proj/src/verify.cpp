#include "mcp/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcp {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::NonConvexFace: return "NonConvexFace";
    case ViolationCode::NonEmptyFace: return "NonEmptyFace";
    case ViolationCode::ForeignVertex: return "ForeignVertex";
    case ViolationCode::EdgeMismatch: return "EdgeMismatch";
    case ViolationCode::AreaMismatch: return "AreaMismatch";
    case ViolationCode::UncoveredPoint: return "UncoveredPoint";
  }
  return "?";
}

bool Verdict::has(ViolationCode code) const {
  for (const auto& v : violations)
    if (v.code == code) return true;
  return false;
}

Verdict verify_partition(const Instance& inst, const Partition& p) {
  Verdict verdict;
  auto flag = [&](ViolationCode code, std::string detail) {
    verdict.violations.push_back({code, std::move(detail)});
  };
  const int n = inst.n();

  std::vector<char> face_ok(p.faces.size(), 1);
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& ring = p.faces[f].ring;
    bool ids_ok = ring.size() >= 3;
    for (int id : ring)
      if (id < 0 || id >= n) ids_ok = false;
    if (!ids_ok) {
      flag(ViolationCode::ForeignVertex, "face " + std::to_string(f) + " has invalid vertex ids");
      face_ok[f] = 0;
      continue;
    }
    std::vector<Point> pts;
    pts.reserve(ring.size());
    for (int id : ring) pts.push_back(inst.pt(id));
    if (!polygon_is_weakly_convex(pts)) {
      flag(ViolationCode::NonConvexFace, "face " + std::to_string(f) + " is not weakly convex ccw");
      face_ok[f] = 0;
      continue;
    }
    std::set<int> verts(ring.begin(), ring.end());
    for (int q = 0; q < n; ++q) {
      if (verts.count(q)) continue;
      const int loc = locate_in_convex(pts, inst.pt(q));
      if (loc > 0)
        flag(ViolationCode::NonEmptyFace,
             "point " + std::to_string(q) + " strictly inside face " + std::to_string(f));
      else if (loc == 0)
        flag(ViolationCode::NonEmptyFace, "point " + std::to_string(q) + " on the boundary of face " +
                                              std::to_string(f) + " but not a vertex");
    }
  }

  // edge conservation over faces that are geometrically sane
  std::map<std::pair<int, int>, std::pair<int, int>> usage;  // edge -> (right, left) counts
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    if (!face_ok[f]) continue;
    const auto& ring = p.faces[f].ring;
    const int k = static_cast<int>(ring.size());
    for (int e = 0; e < k; ++e) {
      const int u = ring[e], v = ring[(e + 1) % k];
      auto& cnt = usage[std::minmax(u, v)];
      if (face_side(inst, p.faces[f], u, v) == Side::Right)
        ++cnt.first;
      else
        ++cnt.second;
    }
  }
  const int h = static_cast<int>(inst.hull_ring.size());
  std::set<std::pair<int, int>> hull_edges;
  for (int e = 0; e < h; ++e) {
    const int u = inst.hull_ring[e], v = inst.hull_ring[(e + 1) % h];
    hull_edges.insert(std::minmax(u, v));
  }
  for (const auto& he : hull_edges) {
    auto it = usage.find(he);
    const int total = it == usage.end() ? 0 : it->second.first + it->second.second;
    if (total != 1)
      flag(ViolationCode::EdgeMismatch, "hull edge {" + std::to_string(he.first) + "," +
                                            std::to_string(he.second) + "} used " +
                                            std::to_string(total) + " times, expected 1");
  }
  for (const auto& [edge, cnt] : usage) {
    if (hull_edges.count(edge)) continue;
    if (cnt.first != 1 || cnt.second != 1)
      flag(ViolationCode::EdgeMismatch,
           "internal edge {" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
               "} used " + std::to_string(cnt.first) + " right / " + std::to_string(cnt.second) +
               " left, expected 1/1");
  }

  // exact area identity
  std::vector<Point> hull_pts;
  hull_pts.reserve(h);
  for (int id : inst.hull_ring) hull_pts.push_back(inst.pt(id));
  Wide total = 0;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    if (!face_ok[f]) continue;
    std::vector<Point> pts;
    for (int id : p.faces[f].ring) pts.push_back(inst.pt(id));
    total += ring_doubled_area(pts);
  }
  if (total != ring_doubled_area(hull_pts))
    flag(ViolationCode::AreaMismatch, "face areas do not sum to the hull area");

  std::vector<char> covered(n, 0);
  for (std::size_t f = 0; f < p.faces.size(); ++f)
    if (face_ok[f])
      for (int id : p.faces[f].ring) covered[id] = 1;
  for (int q = 0; q < n; ++q)
    if (!covered[q])
      flag(ViolationCode::UncoveredPoint, "point " + std::to_string(q) + " is not a face vertex");

  verdict.valid = verdict.violations.empty();
  return verdict;
}

int count_faces_from_edges(const Instance& inst, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> set;
  for (const auto& [a, b] : edges) set.insert(std::minmax(a, b));
  const int h = static_cast<int>(inst.hull_ring.size());
  for (int e = 0; e < h; ++e) {
    const auto key = std::minmax(inst.hull_ring[e], inst.hull_ring[(e + 1) % h]);
    if (!set.count(key))
      throw Error(ErrorCode::MissingHullEdge, "hull edge {" + std::to_string(key.first) + "," +
                                                  std::to_string(key.second) + "} missing");
  }
  return static_cast<int>(set.size()) - inst.n() + 1;
}

}  // namespace mcp
