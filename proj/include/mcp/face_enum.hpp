#pragma once

#include <cstddef>
#include <map>

#include "mcp/geometry.hpp"

namespace mcp {

// Empty weakly convex polygon over instance points. The ring is ccw and
// rotated so that it starts at the smallest vertex id, which makes the
// representation unique.
struct Face {
  std::vector<int> ring;
};

inline bool operator==(const Face& a, const Face& b) { return a.ring == b.ring; }
inline bool operator<(const Face& a, const Face& b) { return a.ring < b.ring; }

struct ArcSides {
  std::vector<int> right;  // face ids, ascending
  std::vector<int> left;
};

struct EnumOptions {
  std::size_t max_faces = 10'000'000;
};

struct FaceCatalog {
  std::vector<Face> faces;
  // keyed by the unordered id pair (min id, max id); arc orientation is
  // recovered from the instance when sides matter
  std::map<std::pair<int, int>, ArcSides> arcs;

  std::size_t size() const { return faces.size(); }
  const ArcSides* find_edge(int a, int b) const;
};

// Which side of arc(u,v) a face containing edge {u,v} lies on: Left iff some
// vertex is strictly left, Right otherwise (collinear run vertices land Right).
Side face_side(const Instance& inst, const Face& f, int u, int v);

FaceCatalog make_catalog(const Instance& inst, std::vector<Face> faces);

// All empty weakly convex polygons with >= 3 vertices, each exactly once.
// Pivot scheme: every face is discovered from its lexicographically smallest
// vertex by enumerating convex chains over the angularly sorted remainder.
FaceCatalog enumerate_faces(const Instance& inst, const EnumOptions& opts = {});

// Independent oracle: subset enumeration, n <= max_points.
FaceCatalog brute_force_faces(const Instance& inst, int max_points = 16);

std::pair<const std::vector<int>&, const std::vector<int>&> side_lists(const FaceCatalog& cat,
                                                                       const Instance& inst,
                                                                       int a, int b);

}  // namespace mcp
