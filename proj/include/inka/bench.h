#pragma once

// Analysis rows for one drawing and the graph x layout x (r, w) benchmark.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inka/geometry.h"
#include "inka/ink.h"
#include "inka/io.h"
#include "inka/layout.h"
#include "inka/raster.h"

namespace inka {

// Fills a ReportRow from a drawing and its measured metrics; rasterizes when
// raster is given.
ReportRow make_report_row(const BoldDrawing& d, const DrawingMetrics& metrics, std::string graph_name,
                          std::string layout_name, EdgeInkMode mode = EdgeInkMode::kClamped,
                          const RasterConfig* raster = nullptr);

struct BenchGraph {
  std::string name;
  std::optional<std::filesystem::path> path;  // read from a file...
  std::optional<GraphFormat> format;
  std::string generator;                      // ...or built from a spec such as "grid:10x10"
};

struct BenchLayout {
  std::string name;
  LayoutConfig config;
};

struct BenchSetting {
  double r = 1.0;
  double w = 0.0;
};

std::vector<BenchSetting> default_bench_settings();  // (1,0) (1,1) (2,1) (20,1) (20,2)

struct BenchConfig {
  std::vector<BenchGraph> graphs;
  std::vector<BenchLayout> layouts;
  std::vector<BenchSetting> settings = default_bench_settings();
  double gamma = 1.0;
  AreaMode area;
  EdgeInkMode edge_ink = EdgeInkMode::kStrict;
  std::optional<RasterConfig> raster;
  std::optional<std::filesystem::path> report;
  ReportFormat format = ReportFormat::kCsv;
  std::optional<std::filesystem::path> summary;
  std::optional<std::filesystem::path> manifest;  // defaults to MANIFEST next to the report
};

// JSON object; relative paths resolve against base_dir. Throws InvalidArgument.
BenchConfig parse_bench_config(std::string_view json, const std::filesystem::path& base_dir);
BenchConfig read_bench_config(const std::filesystem::path& path);

struct BenchCheck {
  std::string graph;
  std::string layout;
  std::string claim;   // "base-least" or "radius-1-2"
  std::string detail;
  bool holds = false;
};

struct BenchResult {
  std::vector<ReportRow> rows;       // config order: graph, layout, setting
  std::vector<BenchCheck> checks;    // only comparisons the formula implies
  std::vector<std::string> errors;   // one per graph that failed, "name: message"

  bool complete() const { return errors.empty(); }
  bool checks_hold() const;
};

// Graphs run on up to `threads` workers (0 = hardware concurrency). A graph
// that fails to load or lay out is reported in errors; the others still run.
BenchResult run_bench(const BenchConfig& config, unsigned threads = 0);

std::string format_bench_summary(const BenchResult& result);
std::string format_bench_manifest(const BenchResult& result);

// Writes the configured report, summary and manifest. Returns the paths written.
std::vector<std::filesystem::path> write_bench_outputs(const BenchConfig& config, const BenchResult& result);

}  // namespace inka
