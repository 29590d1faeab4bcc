// transit — command-line front end for the transit library.
//
// Subcommands: graph, prob, region, enumerate, cover, construct.  Outputs are
// exact (fractions as "num/den"); every file-writing invocation also writes a
// run manifest alongside its outputs.  Exit codes: 0 success, 2 parameter or
// seam error, 3 verification failure, 4 resource guard.
//
// Examples:
//   transit graph cycle --n 8 --out c8.json
//   transit prob --graph c8.json --colouring half.txt --t 2
//   transit region --d 4
//   transit enumerate --graph t44.json --mode exhaustive --out-prefix t44 --svg
//   transit cover verify --family linear --weights 1,2 --modulus 5 --m 2 --k 10 --r 1
//   transit cover search --m 2 --k 6 --r 3
//   transit construct halfsplit --m 2 --r 2 --k 48 --out-prefix hs48

#include "transit/transit.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace transit;

int worker_count() {
  const char* env = std::getenv("TRANSIT_WORKERS");
  if (!env) return 1;
  const int w = std::atoi(env);
  if (w < 1 || w > 256) throw ParameterError("TRANSIT_WORKERS must be in [1, 256]");
  return w;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Round trip wall-clock to milliseconds so the manifest is tidy.
double round_ms(double s) { return std::floor(s * 1000.0 + 0.5) / 1000.0; }

void finish_manifest(RunManifest& manifest, const Timer& timer,
                     const std::string& anchor) {
  manifest.wall_clock_seconds = round_ms(timer.seconds());
  const std::string path = anchor + ".manifest.json";
  write_manifest(path, manifest);
}

// If the graph label looks like an m-dimensional torus, return m.
std::optional<int> torus_dimension(const std::string& label) {
  int m = 0, k = 0;
  if (std::sscanf(label.c_str(), "torus(%d,%d)", &m, &k) == 2 && m >= 1) return m;
  return std::nullopt;
}

ConvexRegion parse_region_selector(const std::string& selector) {
  if (selector == "t2") return torus2_limit_region();
  if (selector.size() >= 2 && selector[0] == 'd')
    return d_region(std::stoi(selector.substr(1)));
  if (selector.size() >= 2 && selector[0] == 'x')
    return x_region(std::stoi(selector.substr(1)));
  throw ParameterError("region selector '" + selector +
                       "' not understood (use dN, xM, or t2)");
}

// Shared flag block for describing a cover family on the command line.
struct CoverFlags {
  std::string family;
  int m = 0;
  std::vector<std::int64_t> weights;
  std::int64_t modulus = 0;
  int l = 0;
  std::string inner_path;
  int lambda = 0;
  std::string cover_path;

  void attach(CLI::App* cmd, bool with_file) {
    cmd->add_option("--family", family,
                    "cover family: r1, r2, rm, r2m, linear, hamming, lifted");
    cmd->add_option("--m", m, "dimension (r1/r2/rm/r2m/linear)");
    cmd->add_option("--weights", weights, "linear family weights")->delimiter(',');
    cmd->add_option("--modulus", modulus, "linear family modulus");
    cmd->add_option("--l", l, "hamming family order");
    cmd->add_option("--inner", inner_path, "lifted family: inner cover JSON file");
    cmd->add_option("--lambda", lambda, "lifted family: block length");
    if (with_file)
      cmd->add_option("--cover", cover_path, "cover JSON file (instead of flags)");
  }

  CoverPredicate build(RunManifest& manifest) const {
    if (!cover_path.empty()) {
      CoverPredicate c = read_cover(cover_path);
      manifest.add_input(cover_path);
      return c;
    }
    if (family == "r1" || family == "r2" || family == "rm" || family == "r2m") {
      if (m < 1) throw ParameterError("cover family " + family + " needs --m");
      if (family == "r1") return cover_r1(m);
      if (family == "r2") return cover_r2(m);
      if (family == "rm") return cover_rm(m);
      return cover_r2m(m);
    }
    if (family == "linear") {
      if (weights.empty() || modulus == 0)
        throw ParameterError("linear cover needs --weights and --modulus");
      if (m != 0 && m != static_cast<int>(weights.size()))
        throw ParameterError("linear cover: --m disagrees with --weights length");
      return CoverPredicate::linear(weights, modulus);
    }
    if (family == "hamming") {
      if (l < 2) throw ParameterError("hamming cover needs --l >= 2");
      return CoverPredicate::hamming(l);
    }
    if (family == "lifted") {
      if (inner_path.empty() || lambda < 1)
        throw ParameterError("lifted cover needs --inner FILE and --lambda >= 1");
      CoverPredicate inner = read_cover(inner_path);
      manifest.add_input(inner_path);
      return CoverPredicate::lifted(std::move(inner), lambda);
    }
    throw ParameterError("unknown or missing cover family '" + family + "'");
  }
};

Json construction_report(const std::string& kind, const Colouring& c) {
  const RationalPair two = p2(c);
  const RationalPair one = p1(c);
  return Json{{"construction", kind},
              {"n", c.graph().size()},
              {"d", c.graph().degree()},
              {"graph_label", c.graph().label()},
              {"p1", Json::array({fraction_string(one.x), fraction_string(one.y)})},
              {"p2", Json::array({fraction_string(two.x), fraction_string(two.y)})}};
}

void emit_json(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_file(out_path, j.dump(2) + "\n");
}

int run(int argc, char** argv) {
  CLI::App app{"exact transit probabilities of balanced colourings"};
  app.require_subcommand(1);

  // ---- graph ----
  auto* graph_cmd = app.add_subcommand("graph", "build a graph file");
  graph_cmd->require_subcommand(1);
  int cyc_n = 0, tor_m = 0, tor_k = 0, c4_copies = 0;
  std::string graph_out;
  auto* g_cycle = graph_cmd->add_subcommand("cycle", "cycle C_n");
  g_cycle->add_option("--n", cyc_n, "number of vertices (even)")->required();
  auto* g_torus = graph_cmd->add_subcommand("torus", "torus [k]^m");
  g_torus->add_option("--m", tor_m, "dimension")->required();
  g_torus->add_option("--k", tor_k, "side length")->required();
  auto* g_c4 = graph_cmd->add_subcommand("c4union", "disjoint 4-cycles");
  g_c4->add_option("--copies", c4_copies, "number of copies")->required();
  auto* g_cubic = graph_cmd->add_subcommand(
      "cubic40", "the 40-vertex cubic graph with explicit 1-, 2-, 3-covers");
  for (auto* sub : {g_cycle, g_torus, g_c4, g_cubic})
    sub->add_option("--out", graph_out, "output graph JSON path")->required();

  // ---- prob ----
  auto* prob_cmd = app.add_subcommand("prob", "t-step transit pair of a colouring");
  std::string prob_graph, prob_colouring, prob_out;
  int prob_t = 2;
  prob_cmd->add_option("--graph", prob_graph, "graph JSON file")->required();
  prob_cmd->add_option("--colouring", prob_colouring, "R/B string file")->required();
  prob_cmd->add_option("--t", prob_t, "number of steps (default 2)");
  prob_cmd->add_option("--out", prob_out, "write the pair as JSON here");

  // ---- region ----
  auto* region_cmd = app.add_subcommand("region", "emit a reference region");
  int region_d = 0, region_xm = 0;
  bool region_t2 = false;
  std::string region_out;
  auto* opt_d = region_cmd->add_option("--d", region_d, "degree region D_d");
  auto* opt_xm = region_cmd->add_option("--x-m", region_xm, "torus limit region X_2m");
  auto* opt_t2 = region_cmd->add_flag("--t2", region_t2, "exact 2-torus polygon");
  opt_d->excludes(opt_xm)->excludes(opt_t2);
  opt_xm->excludes(opt_t2);
  region_cmd->add_option("--out", region_out, "output region JSON path");

  // ---- enumerate ----
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate balanced colourings");
  std::string enum_graph, enum_mode, enum_prefix;
  std::uint64_t enum_count = 0, enum_seed = 0;
  bool enum_svg = false;
  std::vector<std::string> enum_certify;
  enum_cmd->add_option("--graph", enum_graph, "graph JSON file")->required();
  enum_cmd->add_option("--mode", enum_mode, "exhaustive or sample")->required();
  enum_cmd->add_option("--count", enum_count, "sample size (sample mode)");
  enum_cmd->add_option("--seed", enum_seed, "PRNG seed (sample mode, default 0)");
  enum_cmd->add_option("--out-prefix", enum_prefix, "output path prefix")->required();
  enum_cmd->add_flag("--svg", enum_svg, "also render the scatter SVG");
  enum_cmd->add_option("--certify", enum_certify,
                       "check containment in these regions (dN, xM, t2); "
                       "violations exit 3");

  // ---- cover ----
  auto* cover_cmd = app.add_subcommand("cover", "build, verify, or search covers");
  cover_cmd->require_subcommand(1);
  auto* cb = cover_cmd->add_subcommand("build", "write a cover predicate file");
  CoverFlags build_flags;
  std::string cover_build_out;
  build_flags.attach(cb, false);
  cb->add_option("--out", cover_build_out, "output cover JSON path")->required();
  auto* cv = cover_cmd->add_subcommand("verify", "verify a cover on a torus");
  CoverFlags verify_flags;
  int cover_k = 0, cover_r = -1;
  std::string cover_verify_out;
  verify_flags.attach(cv, true);
  cv->add_option("--k", cover_k, "torus side")->required();
  cv->add_option("--r", cover_r, "expected cover count")->required();
  cv->add_option("--out", cover_verify_out, "write the report JSON here");
  auto* cs = cover_cmd->add_subcommand("search", "exhaustive cover search");
  int search_m = 0, search_k = 0, search_r = -1;
  std::uint64_t search_limit = 5'000'000;
  std::string cover_search_out;
  cs->add_option("--m", search_m, "dimension")->required();
  cs->add_option("--k", search_k, "torus side")->required();
  cs->add_option("--r", search_r, "cover count")->required();
  cs->add_option("--node-limit", search_limit, "DFS node budget");
  cs->add_option("--out", cover_search_out, "write the outcome JSON here");

  // ---- construct ----
  auto* construct_cmd = app.add_subcommand("construct", "build a named colouring");
  construct_cmd->require_subcommand(1);
  auto* ch = construct_cmd->add_subcommand("halfsplit", "cover-based torus split");
  CoverFlags hs_flags;
  int hs_m = 0, hs_k = 0, hs_r = -1;
  std::string hs_prefix;
  hs_flags.attach(ch, true);
  ch->add_option("--mdim", hs_m, "torus dimension")->required();
  ch->add_option("--k", hs_k, "torus side (even)")->required();
  ch->add_option("--r", hs_r, "cover count")->required();
  ch->add_option("--out-prefix", hs_prefix, "output path prefix")->required();
  auto* cc = construct_cmd->add_subcommand("cycle", "cycle colourings");
  std::string cycle_kind, cycle_prefix;
  int cycle_n = 0;
  cc->add_option("--kind", cycle_kind, "half, alternating, or threequarters")
      ->required();
  cc->add_option("--n", cycle_n, "cycle length")->required();
  cc->add_option("--out-prefix", cycle_prefix, "output path prefix")->required();
  auto* cj = construct_cmd->add_subcommand("concat", "concatenate cycle colourings");
  std::string concat_parts, concat_prefix;
  int concat_n = 0;
  cj->add_option("--n", concat_n, "length of each part")->required();
  cj->add_option("--parts", concat_parts,
                 "comma list kind:mult, kinds half|alternating|threequarters")
      ->required();
  cj->add_option("--out-prefix", concat_prefix, "output path prefix")->required();
  auto* ct = construct_cmd->add_subcommand("tile", "tile two colourings");
  int tile_m = 0, tile_k = 0, tile_s = -1, tile_t = 0;
  std::string tile_c1, tile_c2, tile_prefix;
  ct->add_option("--mdim", tile_m, "torus dimension")->required();
  ct->add_option("--k", tile_k, "block side length")->required();
  ct->add_option("--s", tile_s, "blocks coloured by c1")->required();
  ct->add_option("--t", tile_t, "blocks per axis")->required();
  ct->add_option("--c1", tile_c1, "first colouring file (on [k]^m)")->required();
  ct->add_option("--c2", tile_c2, "second colouring file (on [k]^m)")->required();
  ct->add_option("--out-prefix", tile_prefix, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // parameter errors exit 2
  }

  Timer timer;
  RunManifest manifest;
  manifest.command_line = join_args(argc, argv);

  if (graph_cmd->parsed()) {
    Graph g = g_cycle->parsed()    ? build_cycle(cyc_n)
              : g_torus->parsed()  ? build_torus(tor_m, tor_k)
              : g_c4->parsed()     ? build_c4_union(c4_copies)
                                   : build_cubic40();
    write_graph(graph_out, g);
    manifest.outputs = {graph_out};
    finish_manifest(manifest, timer, graph_out);
    std::cout << g.label() << ": n=" << g.size() << " d=" << g.degree()
              << " edges=" << g.edges().size() << " -> " << graph_out << "\n";
    return 0;
  }

  if (prob_cmd->parsed()) {
    Graph g = read_graph(prob_graph);
    manifest.add_input(prob_graph);
    const std::string s = read_colouring_string(prob_colouring);
    manifest.add_input(prob_colouring);
    Colouring c = Colouring::from_string(std::move(g), s);
    const RationalPair pair = pt(c, prob_t);
    std::cout << fraction_string(pair.x) << ", " << fraction_string(pair.y) << "\n";
    if (!prob_out.empty()) {
      emit_json(Json{{"t", prob_t},
                     {"x", fraction_string(pair.x)},
                     {"y", fraction_string(pair.y)}},
                prob_out);
      manifest.outputs = {prob_out};
      finish_manifest(manifest, timer, prob_out);
    }
    return 0;
  }

  if (region_cmd->parsed()) {
    if (!region_t2 && opt_xm->count() == 0 && opt_d->count() == 0)
      throw ParameterError("region: one of --d, --x-m, --t2 required");
    ConvexRegion r = region_t2           ? torus2_limit_region()
                     : opt_xm->count()   ? x_region(region_xm)
                                         : d_region(region_d);
    emit_json(region_to_json(r), region_out);
    if (!region_out.empty()) {
      manifest.outputs = {region_out};
      finish_manifest(manifest, timer, region_out);
    }
    return 0;
  }

  if (enum_cmd->parsed()) {
    Graph g = read_graph(enum_graph);
    manifest.add_input(enum_graph);
    EnumerateOptions options;
    options.workers = worker_count();
    RegionCloud::Mode mode;
    if (enum_mode == "exhaustive") {
      mode = RegionCloud::Mode::Exhaustive;
    } else if (enum_mode == "sample") {
      mode = RegionCloud::Mode::Sampled;
      if (enum_count == 0)
        throw ParameterError("enumerate: sample mode needs --count");
      options.sample_count = enum_count;
      options.seed = enum_seed;
      manifest.has_seed = true;
      manifest.seed = enum_seed;
    } else {
      throw ParameterError("enumerate: --mode must be exhaustive or sample");
    }
    const RegionCloud cloud = enumerate_region(g, mode, options);

    const std::string csv_path = enum_prefix + ".csv";
    const std::string cloud_path = enum_prefix + ".cloud.json";
    const std::string hull_path = enum_prefix + ".hull.json";
    write_cloud_csv(csv_path, cloud);
    write_cloud_json(cloud_path, cloud);
    write_region(hull_path, cloud.hull());
    manifest.outputs = {csv_path, cloud_path, hull_path};
    if (enum_svg) {
      std::vector<SvgOverlay> overlays;
      overlays.push_back({d_region(g.degree()), "0.02,0.012"});
      if (auto m = torus_dimension(g.label()); m && *m >= 2)
        overlays.push_back({x_region(*m), "0.004,0.012"});
      const std::string svg_path = enum_prefix + ".svg";
      write_cloud_svg(svg_path, cloud, overlays);
      manifest.outputs.push_back(svg_path);
    }

    bool violations = false;
    if (!enum_certify.empty()) {
      Json reports = Json::array();
      for (const auto& selector : enum_certify) {
        const ConvexRegion region = parse_region_selector(selector);
        const ContainmentReport rep = check_containment(cloud, region);
        Json jr = containment_report_to_json(rep);
        jr["region"] = region.label();
        violations = violations || !rep.ok();
        reports.push_back(std::move(jr));
      }
      const std::string certify_path = enum_prefix + ".certify.json";
      write_file(certify_path, reports.dump(2) + "\n");
      manifest.outputs.push_back(certify_path);
    }
    finish_manifest(manifest, timer, enum_prefix);
    std::cout << cloud.graph_label << ": " << cloud.total() << " colourings, "
              << cloud.points.size() << " distinct points -> " << csv_path << "\n";
    if (violations) {
      std::cerr << "containment violations found\n";
      return 3;
    }
    return 0;
  }

  if (cover_cmd->parsed()) {
    if (cb->parsed()) {
      const CoverPredicate cover = build_flags.build(manifest);
      write_cover(cover_build_out, cover);
      manifest.outputs = {cover_build_out};
      finish_manifest(manifest, timer, cover_build_out);
      std::cout << "cover written -> " << cover_build_out << "\n";
      return 0;
    }
    if (cv->parsed()) {
      const CoverPredicate cover = verify_flags.build(manifest);
      const CoverReport rep = verify_on_torus(cover, cover_k, cover_r);
      Json j = cover_report_to_json(rep);
      std::cout << (rep.ok() ? "pass" : "FAIL") << ": " << rep.member_count << "/"
                << rep.cell_count << " members, density "
                << fraction_string(rep.density) << "\n";
      if (!cover_verify_out.empty()) {
        emit_json(j, cover_verify_out);
        manifest.outputs = {cover_verify_out};
        finish_manifest(manifest, timer, cover_verify_out);
      }
      return rep.ok() ? 0 : 3;
    }
    // search
    const SearchOutcome out =
        exhaustive_cover_search(search_m, search_k, search_r, search_limit);
    std::cout << (out.status == SearchOutcome::Status::Found ? "found"
                  : out.status == SearchOutcome::Status::NonExistent
                      ? "non-existent"
                      : "resource-limit")
              << ": " << out.note << " (nodes=" << out.nodes << ")\n";
    if (!cover_search_out.empty()) {
      emit_json(search_outcome_to_json(out), cover_search_out);
      manifest.outputs = {cover_search_out};
      finish_manifest(manifest, timer, cover_search_out);
    }
    return out.status == SearchOutcome::Status::ResourceLimit ? 4 : 0;
  }

  // ---- construct ----
  if (ch->parsed()) {
    CoverPredicate cover = [&]() -> CoverPredicate {
      if (!hs_flags.cover_path.empty()) return hs_flags.build(manifest);
      if (!hs_flags.family.empty()) {
        CoverFlags with_m = hs_flags;
        if (with_m.m == 0) with_m.m = hs_m;
        return with_m.build(manifest);
      }
      // Default: the canned family matching r.
      if (hs_r == 1) return cover_r1(hs_m);
      if (hs_r == 2) return cover_r2(hs_m);
      if (hs_r == hs_m) return cover_rm(hs_m);
      if (hs_r == 2 * hs_m) return cover_r2m(hs_m);
      throw ParameterError("halfsplit: no canned cover for r=" +
                           std::to_string(hs_r) + "; pass --cover or --family");
    }();
    const HalfSplitSpec spec = half_split(hs_m, hs_k, hs_r, cover);
    const RationalPair pair = p2(spec.colouring);
    const Rational dll = abs(pair.x - spec.target_linear);
    const Rational dls = abs(pair.y - spec.target_square);
    const Rational dsl = abs(pair.x - spec.target_square);
    const Rational dss = abs(pair.y - spec.target_linear);
    const Rational dev_linear_first = std::max(dll, dls);
    const Rational dev_square_first = std::max(dsl, dss);
    const bool linear_first = dev_linear_first <= dev_square_first;
    const Rational deviation = linear_first ? dev_linear_first : dev_square_first;
    Json report = construction_report("halfsplit", spec.colouring);
    report["m"] = spec.m;
    report["k"] = spec.k;
    report["r"] = spec.r;
    report["a"] = spec.a;
    report["adjust_size"] = spec.flipped.size();
    report["adjust_to_red"] = spec.flipped_to_red;
    report["cover"] = cover_to_json(cover);
    report["target_pair"] = Json::array({fraction_string(spec.target_linear),
                                         fraction_string(spec.target_square)});
    report["matched_orientation"] = linear_first ? "linear-first" : "square-first";
    report["deviation"] = fraction_string(deviation);
    const std::string col_path = hs_prefix + ".colouring.txt";
    const std::string rep_path = hs_prefix + ".report.json";
    write_colouring(col_path, spec.colouring);
    write_file(rep_path, report.dump(2) + "\n");
    manifest.outputs = {col_path, rep_path};
    finish_manifest(manifest, timer, hs_prefix);
    std::cout << "halfsplit m=" << hs_m << " k=" << hs_k << " r=" << hs_r
              << ": p2 = " << fraction_string(pair.x) << ", "
              << fraction_string(pair.y) << " (deviation "
              << fraction_string(deviation) << ", |E|=" << spec.flipped.size()
              << ")\n";
    return 0;
  }

  const auto cycle_by_kind = [](const std::string& kind, int n,
                                ThreeQuartersInfo* info) -> Colouring {
    if (kind == "half") return cycle_half(n);
    if (kind == "alternating") return cycle_alternating(n);
    if (kind == "threequarters") return cycle_three_quarters(n, info);
    throw ParameterError("unknown cycle colouring kind '" + kind + "'");
  };

  if (cc->parsed()) {
    ThreeQuartersInfo info;
    const Colouring c = cycle_by_kind(cycle_kind, cycle_n, &info);
    Json report = construction_report("cycle-" + cycle_kind, c);
    if (cycle_kind == "threequarters") {
      report["seamless"] = info.seamless;
      report["adjusted"] = info.adjusted;
    }
    const std::string col_path = cycle_prefix + ".colouring.txt";
    const std::string rep_path = cycle_prefix + ".report.json";
    write_colouring(col_path, c);
    write_file(rep_path, report.dump(2) + "\n");
    manifest.outputs = {col_path, rep_path};
    finish_manifest(manifest, timer, cycle_prefix);
    std::cout << c.to_string() << "\n";
    return 0;
  }

  if (cj->parsed()) {
    std::vector<std::pair<Colouring, int>> parts;
    std::string token;
    std::istringstream stream(concat_parts);
    while (std::getline(stream, token, ',')) {
      const auto colon = token.find(':');
      if (colon == std::string::npos)
        throw ParameterError("concat parts must be kind:mult, got '" + token + "'");
      const std::string kind = token.substr(0, colon);
      const int mult = std::stoi(token.substr(colon + 1));
      parts.emplace_back(cycle_by_kind(kind, concat_n, nullptr), mult);
    }
    const Colouring c = concat_cycles(parts);
    Json report = construction_report("concat", c);
    report["part_length"] = concat_n;
    report["parts"] = concat_parts;
    const std::string col_path = concat_prefix + ".colouring.txt";
    const std::string rep_path = concat_prefix + ".report.json";
    write_colouring(col_path, c);
    write_file(rep_path, report.dump(2) + "\n");
    manifest.outputs = {col_path, rep_path};
    finish_manifest(manifest, timer, concat_prefix);
    const RationalPair pair = p2(c);
    std::cout << "concat on " << c.graph().label() << ": p2 = "
              << fraction_string(pair.x) << ", " << fraction_string(pair.y) << "\n";
    return 0;
  }

  if (ct->parsed()) {
    const auto torus = std::make_shared<const Graph>(build_torus(tile_m, tile_k));
    const Colouring c1 =
        Colouring::from_string(torus, read_colouring_string(tile_c1));
    manifest.add_input(tile_c1);
    const Colouring c2 =
        Colouring::from_string(torus, read_colouring_string(tile_c2));
    manifest.add_input(tile_c2);
    const Colouring tiled = tile_torus(tile_m, tile_k, c1, c2, tile_s, tile_t);
    const RationalPair pair = p2(tiled);
    const RationalPair pair1 = p2(c1);
    const RationalPair pair2 = p2(c2);
    std::int64_t blocks = 1;
    for (int i = 0; i < tile_m; ++i) blocks *= tile_t;
    const Rational lambda = make_rational(tile_s, blocks);
    const RationalPair avg{lambda * pair1.x + (1 - lambda) * pair2.x,
                           lambda * pair1.y + (1 - lambda) * pair2.y};
    const Rational dev_x = abs(pair.x - avg.x);
    const Rational dev_y = abs(pair.y - avg.y);
    const Rational deviation = std::max(dev_x, dev_y);
    Json report = construction_report("tile", tiled);
    report["k"] = tile_k;
    report["t"] = tile_t;
    report["s"] = tile_s;
    report["p2_c1"] = Json::array({fraction_string(pair1.x), fraction_string(pair1.y)});
    report["p2_c2"] = Json::array({fraction_string(pair2.x), fraction_string(pair2.y)});
    report["weighted_average"] =
        Json::array({fraction_string(avg.x), fraction_string(avg.y)});
    report["deviation"] = fraction_string(deviation);
    const std::string col_path = tile_prefix + ".colouring.txt";
    const std::string rep_path = tile_prefix + ".report.json";
    write_colouring(col_path, tiled);
    write_file(rep_path, report.dump(2) + "\n");
    manifest.outputs = {col_path, rep_path};
    finish_manifest(manifest, timer, tile_prefix);
    std::cout << "tile on " << tiled.graph().label() << ": p2 = "
              << fraction_string(pair.x) << ", " << fraction_string(pair.y)
              << " (deviation " << fraction_string(deviation) << " from average)\n";
    return 0;
  }

  throw ParameterError("no subcommand executed");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const transit::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const transit::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
