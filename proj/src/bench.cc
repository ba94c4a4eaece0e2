#include "inka/bench.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "inka/error.h"
#include "inka/generators.h"

namespace inka {
namespace {

using nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

BenchGraph parse_graph_entry(const json& j, const std::filesystem::path& base) {
  BenchGraph g;
  if (j.is_string()) {
    g.generator = j.get<std::string>();
    g.name = g.generator;
    return g;
  }
  if (!j.is_object()) throw InvalidArgument("graph entries must be strings or objects");
  if (j.contains("path") == j.contains("generate")) {
    throw InvalidArgument("graph entry needs exactly one of \"path\" and \"generate\"");
  }
  if (j.contains("path")) {
    g.path = resolve(base, j.at("path").get<std::string>());
    g.name = g.path->stem().string();
  } else {
    g.generator = j.at("generate").get<std::string>();
    g.name = g.generator;
  }
  if (j.contains("format")) {
    const auto name = j.at("format").get<std::string>();
    g.format = parse_graph_format(name);
    if (!g.format) throw InvalidArgument(fmt::format("unknown graph format \"{}\"", name));
  }
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  return g;
}

BenchLayout parse_layout_entry(const json& j) {
  BenchLayout l;
  std::string algo;
  if (j.is_string()) {
    algo = j.get<std::string>();
  } else if (j.is_object()) {
    algo = j.at("algorithm").get<std::string>();
  } else {
    throw InvalidArgument("layout entries must be strings or objects");
  }
  const auto a = parse_algorithm(algo);
  if (!a) {
    throw InvalidArgument(
        fmt::format("unknown layout algorithm \"{}\" (supported: {})", algo, supported_algorithms()));
  }
  l.config.algorithm = *a;
  l.name = std::string(algorithm_name(*a));
  if (j.is_object()) {
    if (j.contains("seed")) l.config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("iterations")) l.config.iterations = j.at("iterations").get<int>();
    if (j.contains("ideal_edge_length")) l.config.ideal_edge_length = j.at("ideal_edge_length").get<double>();
    if (j.contains("cooling")) l.config.cooling = j.at("cooling").get<double>();
    if (j.contains("name")) l.name = j.at("name").get<std::string>();
  }
  l.config.validate();
  return l;
}

struct GraphRun {
  std::vector<ReportRow> rows;
  std::vector<BenchCheck> checks;
  std::string error;
};

const ReportRow* find_setting(const std::vector<ReportRow>& rows, std::size_t first, std::size_t count,
                              double r, double w) {
  for (std::size_t i = first; i < first + count; ++i) {
    if (rows[i].r == r && rows[i].w == w) return &rows[i];
  }
  return nullptr;
}

// Comparisons across the settings of one (graph, layout) block.
void check_block(const std::vector<ReportRow>& rows, std::size_t first, std::size_t count,
                 std::vector<BenchCheck>& out) {
  const ReportRow& head = rows[first];
  const ReportRow* base = find_setting(rows, first, count, 1.0, 0.0);
  if (base) {
    for (std::size_t i = first; i < first + count; ++i) {
      const ReportRow& s = rows[i];
      if (&s == base || s.r < 1.0) continue;
      const double edge_term = s.w * (s.L - 2.0 * static_cast<double>(s.m) * s.r);
      const double overlap = s.w * s.w * static_cast<double>(s.cr);
      if (edge_term < overlap) continue;
      BenchCheck c{head.graph_name, head.layout_name, "base-least",
                   fmt::format("ink(1,0)={:.6g} <= ink({:g},{:g})={:.6g}", base->ink, s.r, s.w, s.ink),
                   base->ink <= s.ink};
      out.push_back(std::move(c));
    }
  }
  const ReportRow* r1 = find_setting(rows, first, count, 1.0, 1.0);
  const ReportRow* r2 = find_setting(rows, first, count, 2.0, 1.0);
  const double degree = head.n ? 2.0 * static_cast<double>(head.m) / static_cast<double>(head.n) : 0.0;
  if (r1 && r2 && degree <= 5.0 && r1->ink > 0) {
    const double change = std::abs(r2->ink - r1->ink) / r1->ink;
    out.push_back({head.graph_name, head.layout_name, "radius-1-2",
                   fmt::format("d={:.3g} |ink(2,1)-ink(1,1)|/ink(1,1)={:.4f} < 0.1", degree, change),
                   change < 0.1});
  }
}

GraphRun run_graph(const BenchConfig& config, const BenchGraph& bg) {
  GraphRun run;
  Graph g = bg.path ? read_graph(*bg.path, bg.format).graph : generate_graph(bg.generator);
  for (const BenchLayout& bl : config.layouts) {
    const Layout lay = compute_layout(g, bl.config);
    // L, cr and edge lengths depend on the layout only.
    const DrawingMetrics base = measure(BoldDrawing(g, lay, {0.0, 0.0, config.gamma}));
    const std::size_t first = run.rows.size();
    for (const BenchSetting& s : config.settings) {
      const BoldDrawing d(g, lay, {s.r, s.w, config.gamma});
      DrawingMetrics metrics = base;
      metrics.area = bounding_area(d, config.area);
      const RasterConfig* raster = config.raster ? &*config.raster : nullptr;
      run.rows.push_back(make_report_row(d, metrics, bg.name, bl.name, config.edge_ink, raster));
    }
    check_block(run.rows, first, config.settings.size(), run.checks);
  }
  return run;
}

}  // namespace

ReportRow make_report_row(const BoldDrawing& d, const DrawingMetrics& metrics, std::string graph_name,
                          std::string layout_name, EdgeInkMode mode, const RasterConfig* raster) {
  const InkReport ink = ink_total(d, metrics, mode);
  ReportRow row;
  row.graph_name = std::move(graph_name);
  row.layout_name = std::move(layout_name);
  row.n = d.graph().node_count();
  row.m = d.graph().edge_count();
  row.r = d.params().radius;
  row.w = d.params().width;
  row.gamma = d.params().gamma;
  row.L = metrics.total_edge_length;
  row.cr = metrics.crossings;
  row.A = metrics.area;
  row.ink = ink.ink_total;
  row.density = ink.density;
  row.feasible = ink.feasible;
  if (raster) row.raster_ink = rasterize_ink(d, *raster);
  return row;
}

std::vector<BenchSetting> default_bench_settings() { return {{1, 0}, {1, 1}, {2, 1}, {20, 1}, {20, 2}}; }

BenchConfig parse_bench_config(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(fmt::format("bench config: {}", e.what()));
  }
  if (!j.is_object()) throw InvalidArgument("bench config: top level must be an object");
  BenchConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "graphs") {
        for (const json& g : value) c.graphs.push_back(parse_graph_entry(g, base_dir));
      } else if (key == "layouts") {
        for (const json& l : value) c.layouts.push_back(parse_layout_entry(l));
      } else if (key == "settings") {
        c.settings.clear();
        for (const json& s : value) {
          if (!s.is_array() || s.size() != 2) throw InvalidArgument("settings are [r, w] pairs");
          c.settings.push_back({s[0].get<double>(), s[1].get<double>()});
          RenderParams{c.settings.back().r, c.settings.back().w, 1.0}.validate();
        }
      } else if (key == "gamma") {
        c.gamma = value.get<double>();
      } else if (key == "area") {
        c.area = value.is_number() ? AreaMode::fixed_value(value.get<double>())
                                   : AreaMode::parse(value.get<std::string>());
      } else if (key == "edge_ink") {
        const auto m = value.get<std::string>();
        if (m == "strict") {
          c.edge_ink = EdgeInkMode::kStrict;
        } else if (m == "clamped") {
          c.edge_ink = EdgeInkMode::kClamped;
        } else {
          throw InvalidArgument(fmt::format("edge_ink must be \"strict\" or \"clamped\", not \"{}\"", m));
        }
      } else if (key == "raster") {
        if (value.is_boolean()) {
          if (value.get<bool>()) c.raster = RasterConfig{};
        } else {
          RasterConfig rc;
          rc.resolution = value.value("resolution", rc.resolution);
          rc.supersampling = value.value("supersampling", rc.supersampling);
          rc.validate();
          c.raster = rc;
        }
      } else if (key == "outputs") {
        if (value.contains("report")) c.report = resolve(base_dir, value.at("report").get<std::string>());
        if (value.contains("summary")) c.summary = resolve(base_dir, value.at("summary").get<std::string>());
        if (value.contains("manifest")) c.manifest = resolve(base_dir, value.at("manifest").get<std::string>());
        if (value.contains("format")) {
          const auto f = parse_report_format(value.at("format").get<std::string>());
          if (!f) throw InvalidArgument("outputs.format must be csv or json");
          c.format = *f;
        }
      } else {
        throw InvalidArgument(fmt::format("unknown key \"{}\"", key));
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(fmt::format("bench config: {}", e.what()));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(fmt::format("bench config: {}", e.what()));
  }
  if (c.graphs.empty()) throw InvalidArgument("bench config: no graphs");
  if (c.layouts.empty()) throw InvalidArgument("bench config: no layouts");
  if (c.settings.empty()) throw InvalidArgument("bench config: no settings");
  if (!(c.gamma > 0 && c.gamma <= 1)) throw InvalidArgument("bench config: gamma must lie in (0, 1]");
  return c;
}

BenchConfig read_bench_config(const std::filesystem::path& path) {
  return parse_bench_config(read_text_file(path), path.parent_path());
}

bool BenchResult::checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BenchCheck& c) { return c.holds; });
}

BenchResult run_bench(const BenchConfig& config, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(config.graphs.size()));
  std::vector<GraphRun> runs(config.graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      try {
        runs[i] = run_graph(config, config.graphs[i]);
      } catch (const std::exception& e) {
        runs[i] = {};
        runs[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BenchResult result;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!runs[i].error.empty()) {
      result.errors.push_back(fmt::format("{}: {}", config.graphs[i].name, runs[i].error));
      continue;
    }
    result.rows.insert(result.rows.end(), runs[i].rows.begin(), runs[i].rows.end());
    result.checks.insert(result.checks.end(), runs[i].checks.begin(), runs[i].checks.end());
  }
  return result;
}

std::string format_bench_summary(const BenchResult& result) {
  std::string out;
  std::size_t held = 0;
  for (const BenchCheck& c : result.checks) {
    if (c.holds) ++held;
    out += fmt::format("{} {} {} {}: {}\n", c.holds ? "ok  " : "FAIL", c.claim, c.graph, c.layout, c.detail);
  }
  out += fmt::format("rows: {}\nchecks: {}/{} hold\n", result.rows.size(), held, result.checks.size());
  for (const std::string& e : result.errors) out += fmt::format("error: {}\n", e);
  return out;
}

std::string format_bench_manifest(const BenchResult& result) {
  std::string out = fmt::format("status: {}\n", result.complete() ? "complete" : "incomplete");
  for (const std::string& e : result.errors) out += fmt::format("failed: {}\n", e);
  out += fmt::format("rows: {}\n", result.rows.size());
  for (const ReportRow& r : result.rows) out += fmt::format("{},{},{:g},{:g}\n", r.graph_name, r.layout_name, r.r, r.w);
  return out;
}

std::vector<std::filesystem::path> write_bench_outputs(const BenchConfig& config, const BenchResult& result) {
  std::vector<std::filesystem::path> written;
  auto ensure_dir = [](const std::filesystem::path& p) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  };
  if (config.report && !result.rows.empty()) {
    ensure_dir(*config.report);
    emit_report(result.rows, config.format, *config.report);
    written.push_back(*config.report);
  }
  if (config.summary) {
    ensure_dir(*config.summary);
    write_text_file(*config.summary, format_bench_summary(result));
    written.push_back(*config.summary);
  }
  std::optional<std::filesystem::path> manifest = config.manifest;
  if (!manifest && config.report) manifest = config.report->parent_path() / "MANIFEST";
  if (manifest) {
    ensure_dir(*manifest);
    write_text_file(*manifest, format_bench_manifest(result));
    written.push_back(*manifest);
  }
  return written;
}

}  // namespace inka
