#include "mcp/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mcp {

namespace {

Wide cross2(Coord ax, Coord ay, Coord bx, Coord by) {
  return static_cast<Wide>(ax) * by - static_cast<Wide>(ay) * bx;
}

Wide dot2(Coord ax, Coord ay, Coord bx, Coord by) {
  return static_cast<Wide>(ax) * bx + static_cast<Wide>(ay) * by;
}

// direction d points into the closed cone spanned ccw from `a` to `b`
// (cone angle < 180 degrees)
bool in_closed_cone(Coord ax, Coord ay, Coord bx, Coord by, Coord dx, Coord dy) {
  return cross2(ax, ay, dx, dy) >= 0 && cross2(dx, dy, bx, by) >= 0;
}

std::pair<Coord, Coord> primitive_dir(Coord dx, Coord dy) {
  const Coord g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
  return {dx / g, dy / g};
}

CutClassification classify_collinear_inside(const Instance& inst,
                                            const std::vector<int>& inside,
                                            const std::vector<int>& outside) {
  // degenerate hull: only the two segment endpoints can demand edges
  auto lexmin = *std::min_element(inside.begin(), inside.end(), [&](int a, int b) {
    return lex_less(inst.pt(a), inst.pt(b));
  });
  auto lexmax = *std::max_element(inside.begin(), inside.end(), [&](int a, int b) {
    return lex_less(inst.pt(a), inst.pt(b));
  });
  CutClassification cls;
  for (int e : {lexmin, lexmax}) {
    const int other = e == lexmin ? lexmax : lexmin;
    const Point& pe = inst.pt(e);
    const Coord tx = inst.pt(other).x - pe.x, ty = inst.pt(other).y - pe.y;
    bool visible = false;
    bool opposite_ray = false;
    for (int q : outside) {
      const Coord dx = inst.pt(q).x - pe.x, dy = inst.pt(q).y - pe.y;
      const bool on_line = cross2(tx, ty, dx, dy) == 0;
      if (!(on_line && dot2(tx, ty, dx, dy) > 0)) visible = true;
      if (on_line && dot2(tx, ty, dx, dy) < 0) opposite_ray = true;
    }
    if (!visible) continue;
    if (inst.on_hull(e))
      ++cls.n3;
    else if (opposite_ray)
      ++cls.n1;
    else
      ++cls.n2;
  }
  return cls;
}

}  // namespace

CutClassification classify_point_split(const Instance& inst, const std::vector<int>& inside) {
  if (inside.empty()) throw Error(ErrorCode::EmptyRegion, "no instance point inside the region");
  std::vector<char> is_in(inst.n(), 0);
  for (int id : inside) is_in[id] = 1;
  std::vector<int> outside;
  for (int id = 0; id < inst.n(); ++id)
    if (!is_in[id]) outside.push_back(id);

  CutClassification cls;
  if (outside.empty()) return cls;

  if (inside.size() == 1) {
    if (inst.on_hull(inside.front()))
      cls.n3 = 1;
    else
      cls.n2 = 1;
    return cls;
  }

  std::vector<Point> pts;
  pts.reserve(inside.size());
  for (int id : inside) pts.push_back(inst.pt(id));
  std::vector<int> ring;
  try {
    ring = convex_hull(pts).first;
  } catch (const Error&) {
    return classify_collinear_inside(inst, inside, outside);
  }

  // drop ring vertices collinear with their two neighbours
  std::vector<int> strict;
  const int h = static_cast<int>(ring.size());
  for (int i = 0; i < h; ++i) {
    const Point& prev = inst.pt(ring[(i + h - 1) % h]);
    const Point& cur = inst.pt(ring[i]);
    const Point& next = inst.pt(ring[(i + 1) % h]);
    if (orient(prev, cur, next) != 0) strict.push_back(ring[i]);
  }

  const int m = static_cast<int>(strict.size());
  for (int i = 0; i < m; ++i) {
    const Point& v = inst.pt(strict[i]);
    const Point& next = inst.pt(strict[(i + 1) % m]);
    const Point& prev = inst.pt(strict[(i + m - 1) % m]);
    const Coord ax = next.x - v.x, ay = next.y - v.y;
    const Coord bx = prev.x - v.x, by = prev.y - v.y;

    bool visible = false;
    for (int q : outside) {
      const Point& pq = inst.pt(q);
      if (!in_closed_cone(ax, ay, bx, by, pq.x - v.x, pq.y - v.y)) {
        visible = true;
        break;
      }
    }
    if (!visible) continue;

    if (inst.on_hull(strict[i])) {
      ++cls.n3;
      continue;
    }
    bool wedge_hit = false;
    for (int q : outside) {
      const Point& pq = inst.pt(q);
      if (orient(v, next, pq) <= 0 && orient(v, prev, pq) >= 0) {
        wedge_hit = true;
        break;
      }
    }
    if (wedge_hit)
      ++cls.n1;
    else
      ++cls.n2;
  }
  return cls;
}

CutClassification cut_classification(const Instance& inst,
                                     const std::vector<std::pair<Coord, Coord>>& region) {
  std::vector<Point> ring;
  ring.reserve(region.size());
  int rid = 0;
  for (const auto& [x, y] : region) ring.push_back(Point{rid++, x, y});
  if (!polygon_is_weakly_convex(ring)) {
    std::reverse(ring.begin(), ring.end());
    if (!polygon_is_weakly_convex(ring))
      throw Error(ErrorCode::Parse, "cut region is not a convex polygon");
  }
  std::vector<int> inside;
  for (int id = 0; id < inst.n(); ++id)
    if (locate_in_convex(ring, inst.pt(id)) >= 0) inside.push_back(id);
  return classify_point_split(inst, inside);
}

int cut_bound(const Instance& inst, const std::vector<std::pair<Coord, Coord>>& region) {
  return cut_classification(inst, region).bound();
}

int line_cut_bound(const Instance& inst, std::pair<Coord, Coord> anchor,
                   std::pair<Coord, Coord> dir) {
  if (dir.first == 0 && dir.second == 0)
    throw Error(ErrorCode::DegenerateLine, "zero direction");
  const Point a{-1, anchor.first, anchor.second};
  const Point b{-2, anchor.first + dir.first, anchor.second + dir.second};
  std::vector<int> left, right;
  for (int id = 0; id < inst.n(); ++id) {
    const int o = orient(a, b, inst.pt(id));
    if (o == 0)
      throw Error(ErrorCode::DegenerateLine, "point " + std::to_string(id) + " lies on the line");
    (o > 0 ? left : right).push_back(id);
  }
  if (left.empty() || right.empty())
    throw Error(ErrorCode::DegenerateLine, "line does not separate the points");
  return std::max(classify_point_split(inst, left).bound(),
                  classify_point_split(inst, right).bound());
}

DegreeBounds degree_lower_bounds(const Instance& inst) {
  const int n = inst.n();
  DegreeBounds db;
  db.d.assign(n, 2);
  for (int id = 0; id < n; ++id) {
    if (!inst.on_hull(id)) {
      // 2 only when a straight 180-degree split through the point exists
      const Point& p = inst.pt(id);
      std::set<std::pair<Coord, Coord>> dirs;
      for (int q = 0; q < n; ++q)
        if (q != id) dirs.insert(primitive_dir(inst.pt(q).x - p.x, inst.pt(q).y - p.y));
      bool split = false;
      for (const auto& [dx, dy] : dirs)
        if (dirs.count({-dx, -dy})) {
          split = true;
          break;
        }
      db.d[id] = split ? 2 : 3;
    } else {
      std::vector<int> rest;
      rest.reserve(n - 1);
      for (int q = 0; q < n; ++q)
        if (q != id) rest.push_back(q);
      db.d[id] = std::max(2, classify_point_split(inst, rest).bound());
    }
  }
  return db;
}

int euler_bound(const Instance& inst, const DegreeBounds& db) {
  const long long sum = std::accumulate(db.d.begin(), db.d.end(), 0LL);
  return static_cast<int>((sum + 1) / 2 - inst.n() + 1);
}

}  // namespace mcp
