#include "mcp/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace mcp {

Wide cross(const Point& p, const Point& q, const Point& r) {
  const Wide ax = q.x - p.x, ay = q.y - p.y;
  const Wide bx = r.x - p.x, by = r.y - p.y;
  return ax * by - ay * bx;
}

int orient(const Point& p, const Point& q, const Point& r) {
  const Wide c = cross(p, q, r);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

Side side_of_arc(const Point& i, const Point& j, const Point& k) {
  if (k.id == i.id || k.id == j.id || same_coords(k, i) || same_coords(k, j))
    throw Error(ErrorCode::UnknownArc, "side_of_arc: point coincides with an arc endpoint");
  return orient(i, j, k) >= 0 ? Side::Right : Side::Left;
}

bool Instance::hull_adjacent(int a, int b) const {
  const int pa = hull_pos[a], pb = hull_pos[b];
  if (pa < 0 || pb < 0) return false;
  const int h = static_cast<int>(hull_ring.size());
  return (pa + 1) % h == pb || (pb + 1) % h == pa;
}

ArcKey Instance::arc(int a, int b) const {
  return lex_less(points[a], points[b]) ? ArcKey{a, b} : ArcKey{b, a};
}

namespace {

Wide dot(Coord ax, Coord ay, Coord bx, Coord by) {
  return static_cast<Wide>(ax) * bx + static_cast<Wide>(ay) * by;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> convex_hull(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw Error(ErrorCode::DegenerateInstance, "convex hull needs at least 3 points");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(pts[a], pts[b]); });

  // strict monotone chain: extreme vertices only, ccw
  auto build = [&](auto begin, auto end) {
    std::vector<int> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient(pts[chain[chain.size() - 2]], pts[chain.back()], pts[*it]) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<int> lower = build(order.begin(), order.end());
  std::vector<int> upper = build(order.rbegin(), order.rend());

  std::vector<int> strict;
  strict.insert(strict.end(), lower.begin(), lower.end() - 1);
  strict.insert(strict.end(), upper.begin(), upper.end() - 1);
  if (strict.size() < 3)
    throw Error(ErrorCode::DegenerateInstance, "all points are collinear");

  // re-insert boundary points lying strictly inside a hull edge
  std::vector<char> used(n, 0);
  for (int v : strict) used[v] = 1;
  std::vector<int> ring;
  const int h = static_cast<int>(strict.size());
  for (int e = 0; e < h; ++e) {
    const int a = strict[e], b = strict[(e + 1) % h];
    ring.push_back(a);
    std::vector<int> mid;
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      if (point_strictly_between(pts[a], pts[b], pts[k])) mid.push_back(k);
    }
    std::sort(mid.begin(), mid.end(), [&](int u, int v) {
      const Wide du = dot(pts[u].x - pts[a].x, pts[u].y - pts[a].y,
                          pts[b].x - pts[a].x, pts[b].y - pts[a].y);
      const Wide dv = dot(pts[v].x - pts[a].x, pts[v].y - pts[a].y,
                          pts[b].x - pts[a].x, pts[b].y - pts[a].y);
      return du < dv;
    });
    for (int m : mid) {
      used[m] = 1;
      ring.push_back(m);
    }
  }

  // canonical start: smallest id on the ring
  auto start = std::min_element(ring.begin(), ring.end(),
                                [&](int a, int b) { return pts[a].id < pts[b].id; });
  std::rotate(ring.begin(), start, ring.end());

  std::vector<char> on_ring(n, 0);
  for (int v : ring) on_ring[v] = 1;
  std::vector<int> interior;
  for (int k = 0; k < n; ++k)
    if (!on_ring[k]) interior.push_back(k);
  std::sort(interior.begin(), interior.end(), [&](int a, int b) { return pts[a].id < pts[b].id; });

  // map positions to ids
  std::vector<int> ring_ids, interior_ids;
  ring_ids.reserve(ring.size());
  for (int v : ring) ring_ids.push_back(pts[v].id);
  for (int v : interior) interior_ids.push_back(pts[v].id);
  return {ring_ids, interior_ids};
}

Instance make_instance(std::string name, const std::vector<std::pair<Coord, Coord>>& coords) {
  constexpr Coord kMax = 2147483647;
  Instance inst;
  inst.name = std::move(name);
  inst.points.reserve(coords.size());
  int id = 0;
  for (const auto& [x, y] : coords) {
    if (x < -kMax || x > kMax || y < -kMax || y > kMax)
      throw Error(ErrorCode::CoordinateOverflow,
                  "coordinate outside 32-bit range at point " + std::to_string(id));
    inst.points.push_back(Point{id++, x, y});
  }
  if (inst.points.size() < 3)
    throw Error(ErrorCode::DegenerateInstance, "instance needs at least 3 points");

  std::vector<int> order(inst.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(inst.points[a], inst.points[b]);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (same_coords(inst.points[order[k - 1]], inst.points[order[k]]))
      throw Error(ErrorCode::Parse, "duplicate points: id " + std::to_string(order[k - 1]) +
                                        " and id " + std::to_string(order[k]));
  }

  auto [ring, interior] = convex_hull(inst.points);
  inst.hull_ring = std::move(ring);
  inst.interior_ids = std::move(interior);
  inst.hull_pos.assign(inst.points.size(), -1);
  for (int pos = 0; pos < static_cast<int>(inst.hull_ring.size()); ++pos)
    inst.hull_pos[inst.hull_ring[pos]] = pos;
  return inst;
}

bool point_strictly_between(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  const Wide d1 = dot(p.x - a.x, p.y - a.y, b.x - a.x, b.y - a.y);
  const Wide d2 = dot(p.x - b.x, p.y - b.y, a.x - b.x, a.y - b.y);
  return d1 > 0 && d2 > 0;
}

bool segments_properly_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  const int o1 = orient(a1, a2, b1);
  const int o2 = orient(a1, a2, b2);
  const int o3 = orient(b1, b2, a1);
  const int o4 = orient(b1, b2, a2);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // collinear: open intervals along the common line must overlap
    const Point* lo1 = &a1;
    const Point* hi1 = &a2;
    if (lex_less(*hi1, *lo1)) std::swap(lo1, hi1);
    const Point* lo2 = &b1;
    const Point* hi2 = &b2;
    if (lex_less(*hi2, *lo2)) std::swap(lo2, hi2);
    const Point* lo = lex_less(*lo2, *lo1) ? lo1 : lo2;  // max of the lows
    const Point* hi = lex_less(*hi1, *hi2) ? hi1 : hi2;  // min of the highs
    return lex_less(*lo, *hi);
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

namespace {

// angular half for the branch cut at direction (1,0): 0 = [0,pi), 1 = [pi,2pi)
int angle_half(Coord dx, Coord dy) {
  return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

bool angle_strictly_before(Coord ax, Coord ay, Coord bx, Coord by) {
  const int ha = angle_half(ax, ay), hb = angle_half(bx, by);
  if (ha != hb) return ha < hb;
  return static_cast<Wide>(ax) * by - static_cast<Wide>(ay) * bx > 0;
}

}  // namespace

bool polygon_is_weakly_convex(const std::vector<Point>& ring) {
  const int k = static_cast<int>(ring.size());
  if (k < 3) return false;
  std::vector<std::pair<Coord, Coord>> dir(k);
  for (int i = 0; i < k; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % k];
    dir[i] = {b.x - a.x, b.y - a.y};
    if (dir[i].first == 0 && dir[i].second == 0) return false;
  }
  // all turns ccw in [0,180), directions completing exactly one revolution
  int wraps = 0;
  bool any_turn = false;
  for (int i = 0; i < k; ++i) {
    const auto [ax, ay] = dir[i];
    const auto [bx, by] = dir[(i + 1) % k];
    const Wide cr = static_cast<Wide>(ax) * by - static_cast<Wide>(ay) * bx;
    if (cr < 0) return false;
    if (cr == 0) {
      if (dot(ax, ay, bx, by) < 0) return false;  // spike
      continue;
    }
    any_turn = true;
    if (angle_strictly_before(bx, by, ax, ay)) ++wraps;
  }
  return any_turn && wraps == 1;
}

int locate_in_convex(const std::vector<Point>& ring, const Point& q) {
  const int k = static_cast<int>(ring.size());
  bool boundary = false;
  for (int i = 0; i < k; ++i) {
    const int o = orient(ring[i], ring[(i + 1) % k], q);
    if (o < 0) return -1;
    if (o == 0) boundary = true;
  }
  return boundary ? 0 : 1;
}

Wide ring_doubled_area(const std::vector<Point>& ring) {
  Wide area = 0;
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % k];
    area += static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
  }
  return area;
}

}  // namespace mcp
