#pragma once

#include "mcp/face_enum.hpp"

namespace mcp {

struct Partition {
  std::vector<Face> faces;
  std::string source;
};

enum class ViolationCode {
  NonConvexFace,
  NonEmptyFace,
  ForeignVertex,
  EdgeMismatch,
  AreaMismatch,
  UncoveredPoint,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct Verdict {
  bool valid = false;
  std::vector<Violation> violations;

  bool has(ViolationCode code) const;
};

// Independent combinatorial check that the faces tile the hull: per-face
// convexity and emptiness, edge conservation, exact doubled-area identity,
// and coverage of every instance point.
Verdict verify_partition(const Instance& inst, const Partition& p);

// Faces of the subdivision induced by an edge set: |E| - n + 1.
int count_faces_from_edges(const Instance& inst, const std::vector<std::pair<int, int>>& edges);

}  // namespace mcp
