#include "mcp/face_enum.hpp"

#include <algorithm>

namespace mcp {

const ArcSides* FaceCatalog::find_edge(int a, int b) const {
  auto it = arcs.find(std::minmax(a, b));
  return it == arcs.end() ? nullptr : &it->second;
}

Side face_side(const Instance& inst, const Face& f, int u, int v) {
  const ArcKey arc = inst.arc(u, v);
  const Point& t = inst.pt(arc.i);
  const Point& h = inst.pt(arc.j);
  for (int w : f.ring) {
    if (w == u || w == v) continue;
    if (orient(t, h, inst.pt(w)) < 0) return Side::Left;
  }
  return Side::Right;
}

FaceCatalog make_catalog(const Instance& inst, std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  FaceCatalog cat;
  cat.faces = std::move(faces);
  for (int f = 0; f < static_cast<int>(cat.faces.size()); ++f) {
    const auto& ring = cat.faces[f].ring;
    const int k = static_cast<int>(ring.size());
    for (int e = 0; e < k; ++e) {
      const int u = ring[e], v = ring[(e + 1) % k];
      ArcSides& sides = cat.arcs[std::minmax(u, v)];
      if (face_side(inst, cat.faces[f], u, v) == Side::Right)
        sides.right.push_back(f);
      else
        sides.left.push_back(f);
    }
  }
  return cat;
}

std::pair<const std::vector<int>&, const std::vector<int>&> side_lists(const FaceCatalog& cat,
                                                                       const Instance& inst,
                                                                       int a, int b) {
  if (a < 0 || b < 0 || a >= inst.n() || b >= inst.n() || a == b)
    throw Error(ErrorCode::UnknownArc, "side_lists: ids are not an instance arc");
  static const std::vector<int> empty;
  const ArcSides* sides = cat.find_edge(a, b);
  if (!sides) return {empty, empty};
  return {sides->right, sides->left};
}

namespace {

std::vector<int> canonical_ring(std::vector<int> ring) {
  auto start = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), start, ring.end());
  return ring;
}

// Candidate around a pivot: angular position plus ray grouping for points
// collinear with the pivot.
struct PivotCandidate {
  int id;
  int ray;         // consecutive group index, same direction from the pivot
  bool ray_first;  // nearest point of its ray
};

}  // namespace

FaceCatalog enumerate_faces(const Instance& inst, const EnumOptions& opts) {
  const int n = inst.n();
  std::vector<Face> faces;

  std::vector<int> lex(n);
  for (int i = 0; i < n; ++i) lex[i] = i;
  std::sort(lex.begin(), lex.end(),
            [&](int a, int b) { return lex_less(inst.pt(a), inst.pt(b)); });

  for (int pi = 0; pi < n; ++pi) {
    const int p = lex[pi];
    const Point& pp = inst.pt(p);

    std::vector<int> cand(lex.begin() + pi + 1, lex.end());
    if (cand.size() < 2) continue;
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      const Point& pa = inst.pt(a);
      const Point& pb = inst.pt(b);
      const Wide cr = cross(pp, pa, pb);
      if (cr != 0) return cr > 0;
      const Wide dxa = pa.x - pp.x, dya = pa.y - pp.y;
      const Wide dxb = pb.x - pp.x, dyb = pb.y - pp.y;
      return dxa * dxa + dya * dya < dxb * dxb + dyb * dyb;
    });

    const int m = static_cast<int>(cand.size());
    std::vector<PivotCandidate> s(m);
    std::vector<int> ray_start;  // first index of each ray group
    for (int k = 0; k < m; ++k) {
      s[k].id = cand[k];
      if (k == 0 || cross(pp, inst.pt(cand[k - 1]), inst.pt(cand[k])) != 0) {
        s[k].ray = k == 0 ? 0 : s[k - 1].ray + 1;
        s[k].ray_first = true;
        ray_start.push_back(k);
      } else {
        s[k].ray = s[k - 1].ray;
        s[k].ray_first = false;
      }
    }

    // clean chain edges: a -> b spans no instance point inside the open cone
    // on the pivot side of the segment, nor on the segment itself
    std::vector<std::vector<int>> next(m);
    for (int ia = 0; ia < m; ++ia) {
      const Point& a = inst.pt(s[ia].id);
      for (int ib = ia + 1; ib < m; ++ib) {
        if (s[ib].ray == s[ia].ray) continue;
        const Point& b = inst.pt(s[ib].id);
        bool clean = true;
        for (int ic = ray_start[s[ia].ray + 1]; ic < ib && clean; ++ic) {
          if (s[ic].ray == s[ib].ray) break;
          if (orient(a, b, inst.pt(s[ic].id)) >= 0) clean = false;
        }
        if (clean) next[ia].push_back(ib);
      }
    }

    // fills: instance points strictly between the pivot and a chain endpoint
    // become mandatory ring vertices on the two pivot-incident edges
    auto emit = [&](const std::vector<int>& chain) {
      if (faces.size() >= opts.max_faces)
        throw Error(ErrorCode::CatalogOverflow,
                    "face catalog exceeds cap of " + std::to_string(opts.max_faces));
      std::vector<int> ring;
      ring.push_back(p);
      const int first = chain.front(), last = chain.back();
      for (int k = ray_start[s[first].ray]; k < first; ++k) ring.push_back(s[k].id);
      for (int c : chain) ring.push_back(s[c].id);
      for (int k = last - 1; k >= ray_start[s[last].ray]; --k) ring.push_back(s[k].id);
      faces.push_back(Face{canonical_ring(std::move(ring))});
    };

    std::vector<int> chain;
    auto dfs = [&](auto&& self, int cur) -> void {
      if (chain.size() >= 2 && !s[cur].ray_first) return;  // blocked spoke
      for (int nb : next[cur]) {
        if (chain.size() >= 2 &&
            orient(inst.pt(s[chain[chain.size() - 2]].id), inst.pt(s[cur].id),
                   inst.pt(s[nb].id)) < 0)
          continue;
        chain.push_back(nb);
        emit(chain);
        self(self, nb);
        chain.pop_back();
      }
    };
    for (int start = 0; start < m; ++start) {
      chain.assign(1, start);
      dfs(dfs, start);
    }
  }

  return make_catalog(inst, std::move(faces));
}

FaceCatalog brute_force_faces(const Instance& inst, int max_points) {
  const int n = inst.n();
  if (n > max_points)
    throw Error(ErrorCode::TooLarge, "brute_force_faces: instance exceeds " +
                                         std::to_string(max_points) + " points");
  std::vector<Face> faces;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    std::vector<Point> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(inst.pt(i));
    std::vector<int> ring_ids;
    try {
      ring_ids = convex_hull(sub).first;
    } catch (const Error&) {
      continue;  // all collinear
    }
    if (ring_ids.size() != sub.size()) continue;  // some chosen point not on the ring

    std::vector<Point> ring_pts;
    ring_pts.reserve(ring_ids.size());
    for (int id : ring_ids) ring_pts.push_back(inst.pt(id));
    bool empty = true;
    for (int i = 0; i < n && empty; ++i) {
      if (mask >> i & 1) continue;
      if (locate_in_convex(ring_pts, inst.pt(i)) >= 0) empty = false;
    }
    if (!empty) continue;
    faces.push_back(Face{canonical_ring(std::move(ring_ids))});
  }
  return make_catalog(inst, std::move(faces));
}

}  // namespace mcp
