#pragma once

#include <cstdint>

#include "mcp/verify.hpp"

namespace mcp {

// Two accepted formats, auto-detected: a JSON object with "name" and a
// "points" array of {i,x,y} records, or plain text "n" followed by n lines
// of "x y".
Instance load_instance(const std::string& path);

void save_instance(const Instance& inst, const std::string& path);
std::string instance_to_json(const Instance& inst);

// n distinct points uniform on [0,grid]^2, deterministic in the seed.
Instance generate_uniform(int n, std::uint64_t seed, Coord grid = 1'000'000);

void save_solution(const std::string& path, const Instance& inst, const Partition& p,
                   int objective);
Partition load_solution(const std::string& path, const Instance& inst);

// Deterministic rendering: faces filled from a cycling palette, dashed hull,
// points as dots. Byte-identical for identical inputs.
void render_svg(const Instance& inst, const Partition& p, const std::string& path);

}  // namespace mcp
