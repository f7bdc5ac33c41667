#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcp {

using Coord = std::int64_t;
using Wide = __int128;  // cross products of 32-bit coordinates need > 64 bits

enum class ErrorCode {
  Parse,
  DegenerateInstance,
  CoordinateOverflow,
  Infeasible,
  TooLarge,
  UnknownArc,
  NotAdjacent,
  EmptyRegion,
  DegenerateLine,
  CollinearInput,
  CatalogOverflow,
  NumericalFailure,
  InstanceMismatch,
  MissingHullEdge,
  Io,
  LimitHit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Point {
  int id = -1;
  Coord x = 0;
  Coord y = 0;
};

inline bool same_coords(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// (x, y) lexicographic order
inline bool lex_less(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

Wide cross(const Point& p, const Point& q, const Point& r);  // (q-p) x (r-p)
int orient(const Point& p, const Point& q, const Point& r);  // sign: +1 ccw, 0 collinear, -1 cw

// The side convention follows the arc orientation: k is Right of arc (i,j)
// iff orient(i,j,k) >= 0, collinear points included on the Right.
enum class Side { Right, Left };

inline Side opposite(Side s) { return s == Side::Right ? Side::Left : Side::Right; }

Side side_of_arc(const Point& i, const Point& j, const Point& k);

// Oriented edge key: tail is the lexicographically smaller endpoint.
struct ArcKey {
  int i = -1;  // tail
  int j = -1;  // head
};

struct Instance {
  std::string name;
  std::vector<Point> points;
  std::vector<int> hull_ring;      // ccw, includes collinear boundary points
  std::vector<int> interior_ids;   // ascending
  std::vector<int> hull_pos;       // id -> ring position, -1 for interior

  int n() const { return static_cast<int>(points.size()); }
  const Point& pt(int id) const { return points[id]; }
  bool on_hull(int id) const { return hull_pos[id] >= 0; }
  bool hull_adjacent(int a, int b) const;
  ArcKey arc(int a, int b) const;
};

Instance make_instance(std::string name, const std::vector<std::pair<Coord, Coord>>& coords);

// Hull ring (ccw, collinear boundary points kept, starting at the smallest id)
// plus the ids left strictly inside. Throws DegenerateInstance.
std::pair<std::vector<int>, std::vector<int>> convex_hull(const std::vector<Point>& pts);

// True iff the open segments share at least one point; touching only at a
// shared endpoint does not count.
bool segments_properly_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

// Simple, counterclockwise, every interior angle <= 180 degrees.
bool polygon_is_weakly_convex(const std::vector<Point>& ring);

bool point_strictly_between(const Point& a, const Point& b, const Point& p);

// +1 strictly inside, 0 on the boundary, -1 outside. Ring must be convex ccw.
int locate_in_convex(const std::vector<Point>& ring, const Point& q);

Wide ring_doubled_area(const std::vector<Point>& ring);

}  // namespace mcp
