#pragma once

// Serialization: graph/colouring/region/cover files, cloud CSV/JSON exports,
// the SVG scatter plot, and the run manifest.  All rational data serializes
// as "num/den" fraction strings; SVG coordinates are 6-decimal fixed point.
// JSON objects are emitted with sorted keys, so identical values give
// byte-identical files.

#include "transit/colouring.hpp"
#include "transit/common.hpp"
#include "transit/covers.hpp"
#include "transit/enumerate.hpp"
#include "transit/graph.hpp"
#include "transit/region.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace transit {

inline constexpr const char* TOOL_VERSION = "0.1.0";

using Json = nlohmann::json;

// --- basic file helpers -----------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParameterError("cannot write file: " + path);
  out << content;
  if (!out) throw ParameterError("write failed: " + path);
}

// FNV-1a 64-bit hash, used to fingerprint input files in run manifests.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string file_fingerprint(const std::string& path) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(read_file(path))));
  return buf;
}

// --- graphs and colourings --------------------------------------------------

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.size()}, {"d", g.degree()}, {"edges", std::move(edges)},
              {"label", g.label()}};
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("edges"))
    throw ParameterError("graph json: expected {n, d, edges}");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ParameterError("graph json: each edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), j.at("d").get<int>(), std::move(edges),
               j.value("label", std::string{}));
}

inline void write_graph(const std::string& path, const Graph& g) {
  write_file(path, graph_to_json(g).dump(2) + "\n");
}

inline Graph read_graph(const std::string& path) {
  return graph_from_json(Json::parse(read_file(path)));
}

inline void write_colouring(const std::string& path, const Colouring& c) {
  write_file(path, c.to_string() + "\n");
}

// Reads an R/B string, ignoring surrounding whitespace.
inline std::string read_colouring_string(const std::string& path) {
  std::string raw = read_file(path);
  std::string s;
  for (char ch : raw)
    if (ch != '\n' && ch != '\r' && ch != ' ' && ch != '\t') s += ch;
  return s;
}

// --- regions ----------------------------------------------------------------

inline Json region_to_json(const ConvexRegion& r) {
  Json verts = Json::array();
  for (const auto& p : r.vertices())
    verts.push_back(Json::array({fraction_string(p.x), fraction_string(p.y)}));
  return Json{{"label", r.label()}, {"vertices", std::move(verts)}};
}

inline ConvexRegion region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("label") || !j.contains("vertices"))
    throw ParameterError("region json: expected {label, vertices}");
  std::vector<RationalPoint> pts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2)
      throw ParameterError("region json: each vertex must be [\"p/q\", \"p/q\"]");
    pts.push_back({parse_fraction(v[0].get<std::string>()),
                   parse_fraction(v[1].get<std::string>())});
  }
  return ConvexRegion(j.at("label").get<std::string>(), std::move(pts));
}

inline void write_region(const std::string& path, const ConvexRegion& r) {
  write_file(path, region_to_json(r).dump(2) + "\n");
}

inline ConvexRegion read_region(const std::string& path) {
  return region_from_json(Json::parse(read_file(path)));
}

// --- covers -----------------------------------------------------------------

inline Json cover_to_json(const CoverPredicate& c) {
  switch (c.family()) {
    case CoverPredicate::Family::Linear: {
      Json w = Json::array();
      for (auto x : c.weights()) w.push_back(x);
      return Json{{"family", "linear"}, {"m", c.dimension()},
                  {"weights", std::move(w)}, {"modulus", c.modulus()}};
    }
    case CoverPredicate::Family::Hamming:
      return Json{{"family", "hamming"}, {"l", c.hamming_order()},
                  {"m", c.dimension()}};
    case CoverPredicate::Family::Lifted:
      return Json{{"family", "lifted"}, {"m", c.dimension()},
                  {"lambda", c.lambda()}, {"inner", cover_to_json(*c.inner())}};
    case CoverPredicate::Family::Explicit: {
      Json period = Json::array();
      for (auto p : c.periods()) period.push_back(p);
      Json pts = Json::array();
      for (const auto& pt : c.explicit_points()) {
        Json row = Json::array();
        for (auto x : pt) row.push_back(x);
        pts.push_back(std::move(row));
      }
      return Json{{"family", "explicit"}, {"m", c.dimension()},
                  {"period", std::move(period)}, {"points", std::move(pts)}};
    }
  }
  throw ParameterError("cover json: unknown family");
}

inline CoverPredicate cover_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "linear") {
    std::vector<std::int64_t> w;
    for (const auto& x : j.at("weights")) w.push_back(x.get<std::int64_t>());
    return CoverPredicate::linear(std::move(w), j.at("modulus").get<std::int64_t>());
  }
  if (family == "hamming") return CoverPredicate::hamming(j.at("l").get<int>());
  if (family == "lifted")
    return CoverPredicate::lifted(cover_from_json(j.at("inner")),
                                  j.at("lambda").get<int>());
  if (family == "explicit") {
    std::vector<std::int64_t> period;
    for (const auto& p : j.at("period")) period.push_back(p.get<std::int64_t>());
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& row : j.at("points")) {
      std::vector<std::int64_t> pt;
      for (const auto& x : row) pt.push_back(x.get<std::int64_t>());
      pts.push_back(std::move(pt));
    }
    return CoverPredicate::explicit_set(j.at("m").get<int>(), std::move(period),
                                        std::move(pts));
  }
  throw ParameterError("cover json: unknown family '" + family + "'");
}

inline void write_cover(const std::string& path, const CoverPredicate& c) {
  write_file(path, cover_to_json(c).dump(2) + "\n");
}

inline CoverPredicate read_cover(const std::string& path) {
  return cover_from_json(Json::parse(read_file(path)));
}

inline Json cover_report_to_json(const CoverReport& r) {
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    Json pt = Json::array();
    for (auto x : v.point) pt.push_back(x);
    viols.push_back(Json{{"point", std::move(pt)}, {"member", v.member},
                         {"member_neighbours", v.member_neighbours}});
  }
  return Json{{"ok", r.ok()},       {"independent", r.independent},
              {"exact", r.exact},   {"r", r.r},
              {"member_count", r.member_count}, {"cell_count", r.cell_count},
              {"density", fraction_string(r.density)},
              {"violations", std::move(viols)}};
}

inline Json search_outcome_to_json(const SearchOutcome& s) {
  const char* status = s.status == SearchOutcome::Status::Found ? "found"
                       : s.status == SearchOutcome::Status::NonExistent
                           ? "non-existent"
                           : "resource-limit";
  Json found = Json::array();
  for (const auto& pt : s.found) {
    Json row = Json::array();
    for (auto x : pt) row.push_back(x);
    found.push_back(std::move(row));
  }
  return Json{{"status", status},
              {"divisibility_ok", s.divisibility_ok},
              {"required_size", fraction_string(s.required_size)},
              {"nodes", s.nodes},
              {"note", s.note},
              {"found", std::move(found)}};
}

// --- clouds -----------------------------------------------------------------

// One CSV row per enumerated colouring, in generation order; this order is
// fixed by mode and seed, independent of the worker count.
inline std::string cloud_csv(const RegionCloud& cloud) {
  std::string out = "red_bitmask_hex,x_num,x_den,y_num,y_den\n";
  for (std::size_t row = 0; row < cloud.total(); ++row) {
    const RationalPair& p = cloud.row_point(row);
    out += cloud.masks[row].hex();
    out += ',';
    out += numerator(p.x).str();
    out += ',';
    out += denominator(p.x).str();
    out += ',';
    out += numerator(p.y).str();
    out += ',';
    out += denominator(p.y).str();
    out += '\n';
  }
  return out;
}

inline void write_cloud_csv(const std::string& path, const RegionCloud& cloud) {
  write_file(path, cloud_csv(cloud));
}

inline Json cloud_to_json(const RegionCloud& cloud) {
  Json points = Json::array();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    points.push_back(Json{{"x", fraction_string(cloud.points[i].x)},
                          {"y", fraction_string(cloud.points[i].y)},
                          {"multiplicity", cloud.multiplicity[i]}});
  }
  Json j{{"graph_label", cloud.graph_label},
         {"n", cloud.n},
         {"d", cloud.d},
         {"mode", cloud.mode == RegionCloud::Mode::Exhaustive ? "exhaustive" : "sampled"},
         {"colourings_enumerated", cloud.total()},
         {"distinct_points", cloud.points.size()},
         {"points", std::move(points)},
         {"hull", region_to_json(cloud.hull())}};
  if (cloud.mode == RegionCloud::Mode::Sampled) j["seed"] = cloud.seed;
  return j;
}

inline void write_cloud_json(const std::string& path, const RegionCloud& cloud) {
  write_file(path, cloud_to_json(cloud).dump(2) + "\n");
}

inline Json containment_report_to_json(const ContainmentReport& rep) {
  Json viols = Json::array();
  for (const auto& v : rep.violations) {
    viols.push_back(Json{{"x", fraction_string(v.point.x)},
                         {"y", fraction_string(v.point.y)},
                         {"multiplicity", v.multiplicity},
                         {"witness", v.witness.hex()}});
  }
  return Json{{"ok", rep.ok()},
              {"interior", rep.interior},
              {"boundary", rep.boundary},
              {"outside", rep.outside},
              {"violations", std::move(viols)}};
}

// --- SVG --------------------------------------------------------------------

// Exact 6-decimal fixed-point rendering of a rational in [0, 1] (rounded to
// nearest millionth), so the SVG text is independent of floating point.
inline std::string fixed6(const Rational& v) {
  const BigInt scaled = rational_floor(v * 1'000'000 + Rational(1, 2));
  BigInt ip = scaled / 1'000'000;
  BigInt fp = scaled % 1'000'000;
  if (fp < 0) {  // only possible for negative inputs, which we do not plot
    fp += 1'000'000;
    ip -= 1;
  }
  std::string frac = fp.str();
  frac.insert(frac.begin(), 6 - frac.size(), '0');
  return ip.str() + "." + frac;
}

struct SvgOverlay {
  ConvexRegion region;
  std::string dash;  // stroke-dasharray, "" for solid
};

// Unit-viewport scatter plot: the distinct cloud points as circles, the cloud
// hull as a path, and each overlay region as exactly one polygon element.
// The y axis is flipped so larger y draws higher.
inline std::string cloud_svg(const RegionCloud& cloud,
                             const std::vector<SvgOverlay>& overlays) {
  const auto px = [](const Rational& x) { return fixed6(x); };
  const auto py = [](const Rational& y) { return fixed6(Rational(1) - y); };
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.05 -0.05 1.1 1.1\" "
       "width=\"640\" height=\"640\">\n";
  s += "  <rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" "
       "stroke=\"#cccccc\" stroke-width=\"0.002\"/>\n";
  for (const auto& ov : overlays) {
    s += "  <polygon points=\"";
    bool first = true;
    for (const auto& v : ov.region.vertices()) {
      if (!first) s += ' ';
      first = false;
      s += px(v.x) + "," + py(v.y);
    }
    s += "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"0.003\"";
    if (!ov.dash.empty()) s += " stroke-dasharray=\"" + ov.dash + "\"";
    s += "><title>" + ov.region.label() + "</title></polygon>\n";
  }
  const ConvexRegion hull = cloud.hull();
  s += "  <path d=\"";
  for (std::size_t i = 0; i < hull.vertices().size(); ++i) {
    const auto& v = hull.vertices()[i];
    s += (i == 0 ? "M" : " L");
    s += px(v.x) + " " + py(v.y);
  }
  if (hull.vertices().size() >= 3) s += " Z";
  s += "\" fill=\"none\" stroke=\"#1f6f43\" stroke-width=\"0.004\"/>\n";
  for (const auto& p : cloud.points) {
    s += "  <circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) +
         "\" r=\"0.006\" fill=\"#20408a\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

inline void write_cloud_svg(const std::string& path, const RegionCloud& cloud,
                            const std::vector<SvgOverlay>& overlays) {
  write_file(path, cloud_svg(cloud, overlays));
}

// --- run manifest -----------------------------------------------------------

// Written alongside every CLI output set as <prefix>.manifest.json.  The
// manifest describes the run (inputs are fingerprinted); it carries timing,
// so it is the one output file not expected to be byte-stable across reruns.
struct RunManifest {
  std::string command_line;
  bool has_seed = false;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, fingerprint
  std::vector<std::string> outputs;
  double wall_clock_seconds = 0.0;

  void add_input(const std::string& path) {
    inputs.emplace_back(path, file_fingerprint(path));
  }
};

inline Json manifest_to_json(const RunManifest& m) {
  Json inputs = Json::object();
  for (const auto& [path, hash] : m.inputs) inputs[path] = hash;
  Json outputs = Json::array();
  for (const auto& p : m.outputs) outputs.push_back(p);
  Json j{{"command_line", m.command_line},
         {"tool_version", TOOL_VERSION},
         {"inputs", std::move(inputs)},
         {"outputs", std::move(outputs)},
         {"wall_clock_seconds", m.wall_clock_seconds}};
  if (m.has_seed) j["seed"] = m.seed;
  return j;
}

inline void write_manifest(const std::string& path, const RunManifest& m) {
  write_file(path, manifest_to_json(m).dump(2) + "\n");
}

}  // namespace transit
