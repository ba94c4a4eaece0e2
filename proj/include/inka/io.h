#pragma once

// Graph file parsers, layout CSV and analysis reports.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inka/model.h"

namespace inka {

// A parsed graph plus non-fatal oddities found in the file.
struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// Coordinate-format Matrix Market. Diagonal entries are dropped and general
// matrices symmetrised. Throws ParseError.
ParsedGraph parse_matrix_market(std::string_view text);

// Chaco / METIS adjacency lists, 1-indexed. Weights are read and discarded.
// An edge count that disagrees with the header is only a warning.
ParsedGraph parse_chaco(std::string_view text);

// Whitespace-separated id pairs; '%' and '#' start comment lines. Ids are
// renumbered 0..n-1 in order of first appearance. Extra numeric columns are
// ignored. Self-loops are dropped with a warning.
ParsedGraph parse_edge_list(std::string_view text);

enum class GraphFormat { kMatrixMarket, kChaco, kEdgeList };

std::optional<GraphFormat> parse_graph_format(std::string_view name);  // "mtx", "chaco", "edges"
// .mtx -> Matrix Market, .graph -> Chaco, anything else -> edge list.
GraphFormat graph_format_for(const std::filesystem::path& path);

// Throws IoError if unreadable, ParseError (message prefixed with the path) if malformed.
ParsedGraph read_graph(const std::filesystem::path& path,
                       std::optional<GraphFormat> format = std::nullopt);

// "u v" per line, 0-indexed, preceded by a "% nodes N" comment so isolated
// nodes survive a round trip through parse_edge_list.
std::string write_edge_list(const Graph& g);

// "node,x,y" CSV with one row per node, any order.
Layout parse_layout_csv(std::string_view text, std::size_t node_count);
std::string write_layout_csv(const Layout& layout);
Layout read_layout(const std::filesystem::path& path, std::size_t node_count);
void write_layout(const std::filesystem::path& path, const Layout& layout);

struct ReportRow {
  std::string graph_name;
  std::string layout_name;
  std::size_t n = 0;
  std::size_t m = 0;
  double r = 0.0;
  double w = 0.0;
  double gamma = 1.0;
  double L = 0.0;
  std::int64_t cr = 0;
  double A = 0.0;
  double ink = 0.0;
  double density = 0.0;
  bool feasible = false;
  std::optional<double> raster_ink;
};

enum class ReportFormat { kCsv, kJson };

std::optional<ReportFormat> parse_report_format(std::string_view name);

// Columns in ReportRow order, then raster_ink when any row has it, then
// log10_ink (empty / null for rows with ink <= 0).
std::string format_report(const std::vector<ReportRow>& rows, ReportFormat format);
// Throws InvalidArgument for no rows, IoError if the file cannot be written.
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace inka
