#include "mcp/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mcp {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Coord int_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(ErrorCode::Parse, where + ": missing integer field '" + key + "'");
  return j[key].get<Coord>();
}

Instance parse_json_instance(const std::string& text, const std::string& fallback_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("instance json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw Error(ErrorCode::Parse, "instance json: expected object with a points array");
  const std::string name = j.value("name", fallback_name);

  const auto& arr = j["points"];
  std::vector<std::pair<Coord, Coord>> coords(arr.size());
  std::vector<char> seen(arr.size(), 0);
  bool indexed = !arr.empty() && arr.front().is_object() && arr.front().contains("i");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& rec = arr[k];
    const std::string where = "points[" + std::to_string(k) + "]";
    if (!rec.is_object()) throw Error(ErrorCode::Parse, where + ": expected object");
    std::size_t at = k;
    if (indexed) {
      const Coord i = int_field(rec, "i", where);
      if (i < 0 || i >= static_cast<Coord>(arr.size()) || seen[i])
        throw Error(ErrorCode::Parse, where + ": bad or repeated index " + std::to_string(i));
      at = static_cast<std::size_t>(i);
      seen[at] = 1;
    }
    coords[at] = {int_field(rec, "x", where), int_field(rec, "y", where)};
  }
  return make_instance(name, coords);
}

Instance parse_plain_instance(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 0)
    throw Error(ErrorCode::Parse, "plain instance: expected a point count on line 1");
  std::vector<std::pair<Coord, Coord>> coords;
  coords.reserve(n);
  for (long long k = 0; k < n; ++k) {
    Coord x, y;
    if (!(in >> x >> y))
      throw Error(ErrorCode::Parse,
                  "plain instance: expected 'x y' on line " + std::to_string(k + 2));
    coords.push_back({x, y});
  }
  return make_instance(name, coords);
}

std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::Parse, path + ": empty file");
  if (text[first] == '{') return parse_json_instance(text, stem_of(path));
  return parse_plain_instance(text, stem_of(path));
}

std::string instance_to_json(const Instance& inst) {
  json pts = json::array();
  for (const Point& p : inst.points) pts.push_back({{"i", p.id}, {"x", p.x}, {"y", p.y}});
  const json j = {{"name", inst.name}, {"points", pts}};
  return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << instance_to_json(inst);
}

Instance generate_uniform(int n, std::uint64_t seed, Coord grid) {
  if (n < 3) throw Error(ErrorCode::DegenerateInstance, "need n >= 3");
  // xorshift-style mix, stable across platforms
  std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  const std::uint64_t span = static_cast<std::uint64_t>(grid) + 1;
  const std::uint64_t reject_above = (UINT64_MAX / span) * span;
  auto draw = [&]() {
    std::uint64_t v;
    do {
      v = next();
    } while (v >= reject_above);
    return static_cast<Coord>(v % span);
  };

  for (;;) {
    std::set<std::pair<Coord, Coord>> used;
    std::vector<std::pair<Coord, Coord>> coords;
    while (static_cast<int>(coords.size()) < n) {
      const std::pair<Coord, Coord> p{draw(), draw()};
      if (used.insert(p).second) coords.push_back(p);
    }
    try {
      return make_instance("uniform-n" + std::to_string(n) + "-s" + std::to_string(seed), coords);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInstance) throw;  // resample collinear draws
    }
  }
}

void save_solution(const std::string& path, const Instance& inst, const Partition& p,
                   int objective) {
  json faces = json::array();
  std::set<std::pair<int, int>> edges;
  for (const Face& f : p.faces) {
    faces.push_back(f.ring);
    const int k = static_cast<int>(f.ring.size());
    for (int e = 0; e < k; ++e) edges.insert(std::minmax(f.ring[e], f.ring[(e + 1) % k]));
  }
  json edge_arr = json::array();
  for (const auto& [a, b] : edges) edge_arr.push_back({a, b});
  const json j = {{"instance", inst.name},
                  {"objective", objective},
                  {"source", p.source},
                  {"faces", faces},
                  {"edges", edge_arr}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump(2) << "\n";
}

Partition load_solution(const std::string& path, const Instance& inst) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("solution json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array())
    throw Error(ErrorCode::Parse, "solution json: expected object with a faces array");
  Partition p;
  p.source = j.value("source", "file");
  for (const auto& ring : j["faces"]) {
    if (!ring.is_array()) throw Error(ErrorCode::Parse, "solution json: face must be an id array");
    Face f;
    for (const auto& v : ring) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::Parse, "solution json: vertex ids must be integers");
      const long long id = v.get<long long>();
      if (id < 0 || id >= inst.n())
        throw Error(ErrorCode::InstanceMismatch,
                    "solution references point " + std::to_string(id) + " outside instance " +
                        inst.name);
      f.ring.push_back(static_cast<int>(id));
    }
    p.faces.push_back(std::move(f));
  }
  return p;
}

void render_svg(const Instance& inst, const Partition& p, const std::string& path) {
  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                                   "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  constexpr int kPaletteSize = 10;

  Coord xmin = inst.points[0].x, xmax = xmin, ymin = inst.points[0].y, ymax = ymin;
  for (const Point& q : inst.points) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  const Coord extent = std::max<Coord>({xmax - xmin, ymax - ymin, 1});
  const Coord pad = std::max<Coord>(1, extent / 20);
  const Coord w = xmax - xmin + 2 * pad, h = ymax - ymin + 2 * pad;
  auto sx = [&](Coord x) { return x - xmin + pad; };
  auto sy = [&](Coord y) { return ymax - y + pad; };  // flip to svg orientation
  const Coord r = std::max<Coord>(1, extent / 150);
  const Coord stroke = std::max<Coord>(1, extent / 400);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    out << "  <polygon points=\"";
    for (std::size_t v = 0; v < p.faces[f].ring.size(); ++v) {
      const Point& q = inst.pt(p.faces[f].ring[v]);
      out << (v ? " " : "") << sx(q.x) << "," << sy(q.y);
    }
    out << "\" fill=\"" << kPalette[f % kPaletteSize] << "\" fill-opacity=\"0.55\" stroke=\"#333\""
        << " stroke-width=\"" << stroke << "\"/>\n";
  }
  out << "  <polygon points=\"";
  for (std::size_t v = 0; v < inst.hull_ring.size(); ++v) {
    const Point& q = inst.pt(inst.hull_ring[v]);
    out << (v ? " " : "") << sx(q.x) << "," << sy(q.y);
  }
  out << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"" << stroke << "\" stroke-dasharray=\""
      << 4 * stroke << " " << 2 * stroke << "\"/>\n";
  for (const Point& q : inst.points)
    out << "  <circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y) << "\" r=\"" << r
        << "\" fill=\"#222\"/>\n";
  out << "</svg>\n";

  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write " + path);
  file << out.str();
}

}  // namespace mcp
