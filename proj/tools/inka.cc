// inka: ink measurement, bounds, layouts and benchmarks for bold drawings.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "inka/bench.h"
#include "inka/error.h"
#include "inka/generators.h"
#include "inka/geometry.h"
#include "inka/ink.h"
#include "inka/io.h"
#include "inka/layout.h"
#include "inka/raster.h"
#include "inka/transforms.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string graph;
  std::string graph_format;
  std::string layout;
  std::string algorithm;
  std::uint64_t seed = 1;
  int iterations = 500;
  double radius = 1.0;
  double width = 0.0;
  double gamma = 1.0;
  std::string area = "auto";
  std::string format = "csv";
  std::string edge_ink = "clamped";
  std::string out;
  bool raster = false;
  int resolution = 2048;
  int supersampling = 2;
  std::optional<double> scale, zoom, partial;
  std::vector<double> ratios{0.1, 0.25, 0.5, 1.0};
  std::optional<double> target_radius, target_width;
  std::string config;
};

std::string check_algorithm(const std::string& s) {
  if (inka::parse_algorithm(s)) return {};
  return fmt::format("unknown layout algorithm \"{}\"; supported: {}", s, inka::supported_algorithms());
}

std::string check_format(const std::string& s) {
  return inka::parse_report_format(s) ? std::string() : "format must be csv or json";
}

std::string check_area(const std::string& s) {
  try {
    inka::AreaMode::parse(s);
    return {};
  } catch (const inka::Error& e) {
    return e.what();
  }
}

// A file path, or a generator spec such as grid:10x10 when no such file exists.
inka::Graph load_graph(const Options& o) {
  std::optional<inka::GraphFormat> format;
  if (!o.graph_format.empty()) {
    format = inka::parse_graph_format(o.graph_format);
    if (!format) throw inka::InvalidArgument(fmt::format("unknown graph format \"{}\"", o.graph_format));
  }
  if (!fs::exists(o.graph) && o.graph.find(':') != std::string::npos) return inka::generate_graph(o.graph);
  inka::ParsedGraph parsed = inka::read_graph(o.graph, format);
  for (const std::string& w : parsed.warnings) std::cerr << "inka: warning: " << o.graph << ": " << w << "\n";
  return std::move(parsed.graph);
}

std::string graph_name(const Options& o) {
  return fs::exists(o.graph) ? fs::path(o.graph).stem().string() : o.graph;
}

inka::LayoutConfig layout_config(const Options& o) {
  inka::LayoutConfig c;
  c.algorithm = *inka::parse_algorithm(o.algorithm.empty() ? "force-directed" : o.algorithm);
  c.seed = o.seed;
  c.iterations = o.iterations;
  c.validate();
  return c;
}

struct Loaded {
  inka::BoldDrawing drawing;
  std::string graph_name;
  std::string layout_name;
};

Loaded load_drawing(const Options& o) {
  inka::Graph g = load_graph(o);
  inka::Layout lay;
  std::string layout_name;
  if (!o.layout.empty()) {
    lay = inka::read_layout(o.layout, g.node_count());
    layout_name = fs::path(o.layout).stem().string();
  } else if (!o.algorithm.empty()) {
    lay = inka::compute_layout(g, layout_config(o));
    layout_name = o.algorithm;
  } else {
    throw inka::InvalidArgument("need --layout or --algorithm");
  }
  inka::RenderParams params{o.radius, o.width, o.gamma};
  params.validate();
  return {inka::BoldDrawing(std::move(g), std::move(lay), params), graph_name(o), layout_name};
}

inka::EdgeInkMode edge_mode(const Options& o) {
  return o.edge_ink == "strict" ? inka::EdgeInkMode::kStrict : inka::EdgeInkMode::kClamped;
}

inka::ReportFormat report_format(const Options& o) { return *inka::parse_report_format(o.format); }

// Everything goes out in one write, so a failure earlier leaves nothing behind.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    inka::write_text_file(o.out, text);
  }
}

ordered_json interval_json(const std::optional<inka::Interval>& i) {
  if (!i) return nullptr;
  return ordered_json{{"lo", i->lo}, {"hi", i->hi}};
}

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::vector<std::pair<std::string, std::string>> bounds_pairs(const inka::BoundsReport& b) {
  auto num = [](double v) { return fmt::format("{:.17g}", v); };
  std::vector<std::pair<std::string, std::string>> kv;
  auto add_interval = [&](const std::string& name, const std::optional<inka::Interval>& i) {
    kv.emplace_back(name + "_lo", i ? num(i->lo) : "");
    kv.emplace_back(name + "_hi", i ? num(i->hi) : "");
  };
  add_interval("r_interval", b.r_interval);
  add_interval("w_interval", b.w_interval);
  add_interval("l_interval", b.l_interval);
  kv.emplace_back("cr_bound", b.cr_bound ? num(*b.cr_bound) : "");
  kv.emplace_back("planar_L_max", b.planar_L_max ? num(*b.planar_L_max) : "");
  kv.emplace_back("r_star", b.min_ink ? num(b.min_ink->r_star) : "");
  kv.emplace_back("min_ink", b.min_ink ? num(b.min_ink->min_ink) : "");
  return kv;
}

ordered_json bounds_json(const inka::BoundsReport& b) {
  ordered_json j;
  j["r_interval"] = interval_json(b.r_interval);
  j["w_interval"] = interval_json(b.w_interval);
  j["l_interval"] = interval_json(b.l_interval);
  j["cr_bound"] = opt_json(b.cr_bound);
  j["planar_L_max"] = opt_json(b.planar_L_max);
  j["min_ink"] = b.min_ink ? ordered_json{{"r_star", b.min_ink->r_star}, {"ink", b.min_ink->min_ink}}
                           : ordered_json(nullptr);
  return j;
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = "quantity,value\n";
  for (const auto& [k, v] : kv) out += fmt::format("{},{}\n", k, v);
  return out;
}

inka::DrawingMetrics measured(const Options& o, const inka::BoldDrawing& d) {
  return inka::measure(d, inka::AreaMode::parse(o.area));
}

int cmd_analyze(const Options& o) {
  const Loaded in = load_drawing(o);
  const inka::DrawingMetrics metrics = measured(o, in.drawing);
  const inka::RasterConfig rc{o.resolution, o.supersampling};
  const inka::ReportRow row = inka::make_report_row(in.drawing, metrics, in.graph_name, in.layout_name,
                                                    edge_mode(o), o.raster ? &rc : nullptr);
  const inka::BoundsReport bounds = inka::bounds_report(in.drawing, metrics);
  const inka::ClarityReport clarity = inka::clarity_decomposition(in.drawing, metrics, edge_mode(o));
  std::string text;
  if (report_format(o) == inka::ReportFormat::kJson) {
    ordered_json j;
    j["report"] = ordered_json::parse(inka::format_report({row}, inka::ReportFormat::kJson));
    j["bounds"] = bounds_json(bounds);
    j["clarity"] = {{"clarity_nodes", clarity.clarity_nodes},
                    {"clarity_edges", clarity.clarity_edges},
                    {"ambiguity_overlap", clarity.ambiguity_overlap}};
    text = j.dump(2) + "\n";
  } else {
    auto kv = bounds_pairs(bounds);
    kv.emplace_back("clarity_nodes", fmt::format("{:.17g}", clarity.clarity_nodes));
    kv.emplace_back("clarity_edges", fmt::format("{:.17g}", clarity.clarity_edges));
    kv.emplace_back("ambiguity_overlap", fmt::format("{:.17g}", clarity.ambiguity_overlap));
    text = inka::format_report({row}, inka::ReportFormat::kCsv) + "\n" + key_value_csv(kv);
  }
  emit(o, text);
  return 0;
}

int cmd_bounds(const Options& o) {
  const Loaded in = load_drawing(o);
  const inka::BoldDrawing& d = in.drawing;
  const inka::DrawingMetrics metrics = measured(o, d);
  const inka::BoundsReport bounds = inka::bounds_report(d, metrics);
  const std::size_t n = d.graph().node_count(), m = d.graph().edge_count();
  const double r = d.params().radius, w = d.params().width, L = metrics.total_edge_length;
  std::optional<inka::RadiusDeltaCheck> rd;
  std::optional<double> wd;
  if (o.target_radius) rd = inka::radius_delta_check(n, m, w, L, metrics.crossings, r, *o.target_radius);
  if (o.target_width) wd = inka::width_delta_ink(w, *o.target_width, L, m, r, metrics.crossings);
  std::string text;
  if (report_format(o) == inka::ReportFormat::kJson) {
    ordered_json j = bounds_json(bounds);
    if (rd) j["radius_delta"] = {{"identity", rd->identity}, {"direct", rd->direct}, {"discrepancy", rd->discrepancy}};
    if (wd) j["width_delta"] = *wd;
    text = j.dump(2) + "\n";
  } else {
    auto kv = bounds_pairs(bounds);
    if (rd) {
      kv.emplace_back("radius_delta_identity", fmt::format("{:.17g}", rd->identity));
      kv.emplace_back("radius_delta_direct", fmt::format("{:.17g}", rd->direct));
      kv.emplace_back("radius_delta_discrepancy", fmt::format("{:.17g}", rd->discrepancy));
    }
    if (wd) kv.emplace_back("width_delta", fmt::format("{:.17g}", *wd));
    text = key_value_csv(kv);
  }
  emit(o, text);
  return 0;
}

int cmd_layout(const Options& o) {
  const inka::Graph g = load_graph(o);
  const inka::Layout lay = inka::compute_layout(g, layout_config(o));
  emit(o, inka::write_layout_csv(lay));
  return 0;
}

double strict_ink(const inka::BoldDrawing& d) {
  return inka::ink_total(d, inka::measure(d, inka::AreaMode::fixed_value(1.0)), inka::EdgeInkMode::kStrict)
      .ink_total;
}

int cmd_transform(const Options& o) {
  const int flags = (o.scale ? 1 : 0) + (o.zoom ? 1 : 0) + (o.partial ? 1 : 0);
  if (flags != 1) throw CLI::ValidationError("transform", "exactly one of --scale, --zoom, --partial is required");
  if (o.out.empty()) throw CLI::ValidationError("transform", "--out is required");
  const Loaded in = load_drawing(o);
  const inka::BoldDrawing& d = in.drawing;
  const double before = strict_ink(d);
  double predicted = 0, measured_value = 0;
  std::string label, file_text, extra;
  if (o.scale) {
    const inka::BoldDrawing scaled(d.graph(), inka::scale_layout(d.layout(), *o.scale), d.params());
    const double L = inka::edge_lengths(d).total;
    predicted = inka::scale_ink_delta(d.params().width, L, *o.scale);
    measured_value = strict_ink(scaled) - before;
    label = "delta";
    file_text = inka::write_layout_csv(scaled.layout());
  } else if (o.zoom) {
    const inka::BoldDrawing zoomed = inka::zoom_drawing(d, *o.zoom);
    predicted = inka::zoom_ink(before, *o.zoom);
    measured_value = strict_ink(zoomed);
    label = "ink";
    file_text = inka::write_layout_csv(zoomed.layout());
    extra = fmt::format("radius,{:.17g}\nwidth,{:.17g}\n", zoomed.params().radius, zoomed.params().width);
  } else {
    const inka::StubSet stubs = inka::partial_edges(d, *o.partial);
    const std::int64_t cr_stubs = inka::measure_stub_crossings(stubs);
    const inka::DrawingMetrics metrics = measured(o, d);
    const inka::PartialEdgeFormulas f = inka::partial_edge_formulas(
        d.graph().node_count(), d.graph().edge_count(), d.params().radius, d.params().width,
        metrics.total_edge_length, *o.partial, metrics.crossings, cr_stubs, d.params().gamma, metrics.area);
    predicted = f.ink_partial;
    measured_value = inka::stub_ink(d, stubs, cr_stubs).total();
    label = "ink";
    file_text = "edge,x1,y1,x2,y2\n";
    for (std::size_t i = 0; i < stubs.segments.size(); ++i) {
      const inka::Segment& s = stubs.segments[i];
      file_text += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g}\n", stubs.parent[i], s.p.x, s.p.y, s.q.x, s.q.y);
    }
    extra = fmt::format("cr_full,{}\ncr_partial,{}\nnecessity_holds,{}\n", metrics.crossings, cr_stubs,
                        f.necessity_holds ? "true" : "false");
  }
  inka::write_text_file(o.out, file_text);
  std::cout << fmt::format("quantity,value\nink_before,{:.17g}\npredicted_{},{:.17g}\nmeasured_{},{:.17g}\n"
                           "difference,{:.17g}\n{}",
                           before, label, predicted, label, measured_value, measured_value - predicted, extra);
  return 0;
}

int cmd_partial(const Options& o) {
  const Loaded in = load_drawing(o);
  const inka::BoldDrawing& d = in.drawing;
  const inka::DrawingMetrics metrics = measured(o, d);
  const double full = inka::ink_components(d, metrics, inka::EdgeInkMode::kStrict).total();
  std::string text = "p,L_partial,cr_partial,ink_partial,formula_ink,necessity_holds,ink_not_larger,cr_lo,cr_hi\n";
  for (double p : o.ratios) {
    const inka::StubSet stubs = inka::partial_edges(d, p);
    const std::int64_t cr = inka::measure_stub_crossings(stubs);
    const double ink = inka::stub_ink(d, stubs, cr).total();
    const inka::PartialEdgeFormulas f = inka::partial_edge_formulas(
        d.graph().node_count(), d.graph().edge_count(), d.params().radius, d.params().width,
        metrics.total_edge_length, p, metrics.crossings, cr, d.params().gamma, metrics.area);
    text += fmt::format("{:g},{:.17g},{},{:.17g},{:.17g},{},{},{},{}\n", p, stubs.total_length(), cr, ink,
                        f.ink_partial, f.necessity_holds, ink <= full,
                        f.cr_partial_interval ? fmt::format("{:.17g}", f.cr_partial_interval->lo) : "",
                        f.cr_partial_interval ? fmt::format("{:.17g}", f.cr_partial_interval->hi) : "");
  }
  emit(o, text);
  return 0;
}

int cmd_render(const Options& o) {
  if (o.out.empty()) throw CLI::ValidationError("render", "--out is required");
  const Loaded in = load_drawing(o);
  inka::render_svg(in.drawing, fs::path(o.out));
  return 0;
}

int cmd_raster(const Options& o) {
  const Loaded in = load_drawing(o);
  const inka::DrawingMetrics metrics = measured(o, in.drawing);
  const inka::RasterConfig rc{o.resolution, o.supersampling};
  const inka::RasterResult r = inka::rasterize(in.drawing, rc);
  const double formula = inka::ink_total(in.drawing, metrics, edge_mode(o)).ink_total;
  emit(o, fmt::format("quantity,value\nraster_ink,{:.17g}\nformula_ink,{:.17g}\nsigned_gap,{:.17g}\n"
                      "sample_size,{:.17g}\nsamples,{}\n",
                      r.area, formula, r.area - formula, r.sample_size, r.samples));
  return 0;
}

unsigned bench_threads() {
  const char* env = std::getenv("INKA_THREADS");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 0) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw inka::InvalidArgument(fmt::format("INKA_THREADS must be a non-negative integer, not \"{}\"", env));
}

int cmd_bench(const Options& o, bool format_given) {
  inka::BenchConfig config = inka::read_bench_config(o.config);
  if (!o.out.empty()) config.report = fs::path(o.out);
  if (format_given) config.format = report_format(o);
  const inka::BenchResult result = inka::run_bench(config, bench_threads());
  if (config.report) {
    inka::write_bench_outputs(config, result);
  } else {
    if (!result.rows.empty()) std::cout << inka::format_report(result.rows, config.format);
    if (config.summary) inka::write_text_file(*config.summary, inka::format_bench_summary(result));
  }
  std::cerr << inka::format_bench_summary(result);
  if (!result.complete()) {
    for (const std::string& e : result.errors) std::cerr << "inka: error: " << e << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ink measurement, bounds, layouts and benchmarks for bold graph drawings"};
  app.require_subcommand(1);
  Options o;

  auto graph_flags = [&](CLI::App* c, bool need_layout) {
    c->add_option("--graph", o.graph, "graph file (.mtx, .graph, edge list) or generator spec")->required();
    c->add_option("--graph-format", o.graph_format, "mtx, chaco or edges (default: by extension)");
    if (need_layout) {
      c->add_option("--layout", o.layout, "layout CSV (node,x,y)");
    }
    c->add_option("--algorithm", o.algorithm, "compute the layout instead of reading one")->check(check_algorithm);
    c->add_option("--seed", o.seed, "layout seed");
    c->add_option("--iterations", o.iterations, "layout iterations");
  };
  auto drawing_flags = [&](CLI::App* c) {
    graph_flags(c, true);
    c->add_option("--radius", o.radius, "node radius r")->capture_default_str();
    c->add_option("--width", o.width, "edge width w")->capture_default_str();
    c->add_option("--gamma", o.gamma, "area fraction gamma in (0, 1]")->capture_default_str();
    c->add_option("--area", o.area, "auto or a fixed drawing area")->check(check_area)->capture_default_str();
  };
  CLI::Option* format_opt = nullptr;
  auto output_flags = [&](CLI::App* c) {
    format_opt = c->add_option("--format", o.format, "csv or json")->check(check_format)->capture_default_str();
    c->add_option("--out", o.out, "output file (default: stdout)");
  };
  auto ink_mode_flag = [&](CLI::App* c) {
    c->add_option("--edge-ink", o.edge_ink, "clamped (per edge) or strict (aggregate)")
        ->check(CLI::IsMember({"clamped", "strict"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "ink, feasibility, bounds and clarity of a drawing");
  drawing_flags(analyze);
  output_flags(analyze);
  ink_mode_flag(analyze);
  analyze->add_flag("--raster", o.raster, "add a raster_ink column");
  analyze->add_option("--resolution", o.resolution, "raster resolution");
  analyze->add_option("--supersampling", o.supersampling, "raster supersampling (1, 2 or 4)");

  CLI::App* bounds = app.add_subcommand("bounds", "radius, width and length bounds for a drawing");
  drawing_flags(bounds);
  output_flags(bounds);
  bounds->add_option("--target-radius", o.target_radius, "also report the ink change to this radius");
  bounds->add_option("--target-width", o.target_width, "also report the ink change to this width");

  CLI::App* layout = app.add_subcommand("layout", "compute a layout and write it as CSV");
  graph_flags(layout, false);
  layout->add_option("--out", o.out, "output CSV (default: stdout)");

  CLI::App* transform = app.add_subcommand("transform", "scale, zoom or partial-edge transform with ink deltas");
  drawing_flags(transform);
  transform->add_option("--scale", o.scale, "multiply edge lengths by sigma");
  transform->add_option("--zoom", o.zoom, "multiply the drawing area by zeta");
  transform->add_option("--partial", o.partial, "keep stubs of ratio p in (0, 1]");
  transform->add_option("--out", o.out, "transformed layout CSV, or stub segments for --partial");

  CLI::App* partial = app.add_subcommand("partial", "partial-edge stub crossings and ink per ratio");
  drawing_flags(partial);
  partial->add_option("--ratios", o.ratios, "stub ratios")->delimiter(',');
  partial->add_option("--out", o.out, "output CSV (default: stdout)");

  CLI::App* render = app.add_subcommand("render", "write the drawing as SVG");
  drawing_flags(render);
  render->add_option("--out", o.out, "SVG file")->required();

  CLI::App* raster = app.add_subcommand("raster", "pixel-counted ink against the formula");
  drawing_flags(raster);
  ink_mode_flag(raster);
  raster->add_option("--resolution", o.resolution, "pixels along the longer side")->capture_default_str();
  raster->add_option("--supersampling", o.supersampling, "1, 2 or 4")->capture_default_str();
  raster->add_option("--out", o.out, "output file (default: stdout)");

  CLI::App* bench = app.add_subcommand("bench", "graph x layout x (r, w) ink benchmark from a JSON config");
  bench->add_option("config", o.config, "bench config (JSON)")->required();
  output_flags(bench);
  CLI::Option* bench_format = format_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*bounds) return cmd_bounds(o);
    if (*layout) return cmd_layout(o);
    if (*transform) return cmd_transform(o);
    if (*partial) return cmd_partial(o);
    if (*render) return cmd_render(o);
    if (*raster) return cmd_raster(o);
    if (*bench) return cmd_bench(o, bench_format->count() > 0);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const inka::Error& e) {
    std::cerr << "inka: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "inka: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
