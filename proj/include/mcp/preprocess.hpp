#pragma once

#include "mcp/face_enum.hpp"

namespace mcp {

struct PreprocessOptions {
  // pass (a) only inspects edges whose smaller side list has at most this
  // many faces; trades completeness for speed
  int pair_limit = 3;
};

// True iff the two faces are adjacent exactly along shared_edge and the
// merged polygon is weakly convex. Throws NotAdjacent when the faces share
// anything other than that single edge.
bool union_is_convex(const Instance& inst, const Face& f1, const Face& f2,
                     std::pair<int, int> shared_edge);

// Convenience overload deriving the single shared edge.
bool union_is_convex(const Instance& inst, const Face& f1, const Face& f2);

// Merged ring of two faces adjacent along {u,v} (ccw, canonical start).
std::vector<int> merge_rings(const Face& f1, const Face& f2, std::pair<int, int> shared_edge);

// Dominance pruning in three passes: dominated edges, dominated faces,
// chords between non-consecutive hull vertices. Optimum-preserving.
FaceCatalog prune_dominated(const FaceCatalog& cat, const Instance& inst,
                            const PreprocessOptions& opts = {});

// Faces forced into every solution: a hull edge whose interior side holds a
// single face pins that face. Throws Infeasible when a hull edge has no
// interior-side face at all.
std::vector<int> find_mandatory(const FaceCatalog& cat, const Instance& inst);

}  // namespace mcp
