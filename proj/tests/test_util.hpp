#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mcp/face_enum.hpp"
#include "mcp/io.hpp"

namespace test_util {

inline mcp::Instance inst_of(const std::vector<std::pair<mcp::Coord, mcp::Coord>>& pts,
                             const std::string& name = "test") {
  return mcp::make_instance(name, pts);
}

inline mcp::Instance triangle() { return inst_of({{0, 0}, {2, 0}, {0, 2}}, "triangle"); }

inline mcp::Instance square() { return inst_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "square"); }

inline mcp::Instance tri_interior() {
  return inst_of({{0, 0}, {3, 0}, {0, 3}, {1, 1}}, "tri-interior");
}

inline mcp::Instance square_center() {
  return inst_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}, "square-center");
}

// square with a collinear midpoint on the bottom edge
inline mcp::Instance square_mid() {
  return inst_of({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}, "square-mid");
}

inline std::set<std::vector<int>> ring_set(const mcp::FaceCatalog& cat) {
  std::set<std::vector<int>> rings;
  for (const auto& f : cat.faces) rings.insert(f.ring);
  return rings;
}

// face rings as coordinate sequences, invariant under point relabeling
inline std::set<std::vector<std::pair<mcp::Coord, mcp::Coord>>> coord_set(
    const mcp::Instance& inst, const mcp::FaceCatalog& cat) {
  std::set<std::vector<std::pair<mcp::Coord, mcp::Coord>>> out;
  for (const auto& f : cat.faces) {
    std::vector<std::pair<mcp::Coord, mcp::Coord>> ring;
    for (int id : f.ring) ring.push_back({inst.pt(id).x, inst.pt(id).y});
    std::size_t best = 0;
    for (std::size_t k = 1; k < ring.size(); ++k)
      if (ring[k] < ring[best]) best = k;
    std::rotate(ring.begin(), ring.begin() + best, ring.end());
    out.insert(std::move(ring));
  }
  return out;
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 2654435769u + 1) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace test_util
