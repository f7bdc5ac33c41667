#pragma once

#include "mcp/geometry.hpp"

namespace mcp {

struct DegreeBounds {
  std::vector<int> d;  // per point id, lower bound on incident edges
};

struct CutClassification {
  int n1 = 0;  // one outgoing edge suffices
  int n2 = 0;  // two outgoing edges required
  int n3 = 0;  // hull points, covered by their mandatory hull edge
  int bound() const { return n1 + 2 * n2 + n3; }
};

// Lower bound on edges between the given inside set and the rest of the
// instance: hull vertices of the inside set that can see outside are
// classified by whether a single outside edge can restore convexity.
CutClassification classify_point_split(const Instance& inst, const std::vector<int>& inside_ids);

// Same classification with the inside set taken as the instance points lying
// in a convex region (closed, integer vertices). Throws EmptyRegion.
CutClassification cut_classification(const Instance& inst,
                                     const std::vector<std::pair<Coord, Coord>>& region);

int cut_bound(const Instance& inst, const std::vector<std::pair<Coord, Coord>>& region);

// Minimum number of solution edges crossing the line through `anchor` with
// direction `dir`. The line must separate the points strictly.
int line_cut_bound(const Instance& inst, std::pair<Coord, Coord> anchor,
                   std::pair<Coord, Coord> dir);

// Per-point degree bounds: 2 on the hull and for interior points sitting
// between two collinear neighbours, otherwise 3; hull degrees are raised by
// the cut classification of everything-but-the-point.
DegreeBounds degree_lower_bounds(const Instance& inst);

// ceil(sum(d)/2) - n + 1
int euler_bound(const Instance& inst, const DegreeBounds& db);

}  // namespace mcp
