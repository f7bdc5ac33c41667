#pragma once

#include "mcp/bounds.hpp"
#include "mcp/face_enum.hpp"

namespace mcp {

enum class Sense { Eq, Le, Ge };

struct Row {
  std::vector<std::pair<int, double>> coef;  // (var, coefficient), vars ascending
  Sense sense = Sense::Eq;
  double rhs = 0.0;
};

struct VarMeta {
  int face_id = -1;               // face-model variables
  int edge_i = -1, edge_j = -1;   // edge-model variables
};

struct Model {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
  std::vector<bool> integral;
  std::vector<int> fixed;  // -1 free, else pinned to 0/1
  std::vector<VarMeta> var_meta;
  // row indices the solver may activate only when violated (edge-model
  // crossing rows; there are O(n^4) of them)
  std::vector<int> lazy_rows;
};

struct FractionalSolution {
  std::vector<double> values;
  double objective_value = 0.0;
};

// Face-selection program: one binary per face, per-arc conservation rows,
// per-point degree rows, mandatory faces pinned to 1.
Model build_face_model(const FaceCatalog& cat, const Instance& inst, const DegreeBounds& db,
                       const std::vector<int>& mandatory);

// Edge-selection baseline: one binary per point pair, crossing exclusions,
// hull edges pinned, left-cover convexity rows and degree >= 3 for interior
// points. General position only.
Model build_edge_model(const Instance& inst);

// Open interiors intersect (touching along shared edges or vertices is fine).
bool faces_conflict(const Instance& inst, const Face& a, const Face& b);

std::vector<Row> separate_clique(const FaceCatalog& cat, const Instance& inst,
                                 const FractionalSolution& frac);

std::vector<Row> separate_odd_cycle(const FaceCatalog& cat, const Instance& inst,
                                    const FractionalSolution& frac);

std::string lp_var_name(const Model& m, int var);
void export_lp(const Model& m, const std::string& path);

}  // namespace mcp
