#include "inka/io.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "inka/error.h"

namespace inka {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({number++, line});
    start = end + 1;
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool blank(std::string_view s) { return trim(s).empty(); }

template <class T>
bool parse_int(std::string_view s, T& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

Graph finish(std::size_t n, std::vector<std::pair<NodeId, NodeId>>& pairs) {
  return Graph::build(n, pairs);
}

}  // namespace

ParsedGraph parse_matrix_market(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected a %%MatrixMarket header");
  const auto head = tokens(lines[0].text);
  if (head.empty() || lower(head[0]) != "%%matrixmarket") {
    throw ParseError(1, "missing %%MatrixMarket header");
  }
  if (head.size() != 5) throw ParseError(1, "header needs object, format, field and symmetry");
  if (lower(head[1]) != "matrix") throw ParseError(1, "unsupported object " + quoted(head[1]));
  if (lower(head[2]) != "coordinate") {
    throw ParseError(1, "only coordinate format is supported, got " + quoted(head[2]));
  }
  const std::string field = lower(head[3]);
  std::size_t values = 0;
  if (field == "pattern") {
    values = 0;
  } else if (field == "real" || field == "integer") {
    values = 1;
  } else if (field == "complex") {
    values = 2;
  } else {
    throw ParseError(1, "unknown field " + quoted(head[3]));
  }
  const std::string symmetry = lower(head[4]);
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
      symmetry != "hermitian") {
    throw ParseError(1, "unknown symmetry " + quoted(head[4]));
  }

  ParsedGraph out;
  std::size_t i = 1;
  auto skip_comments = [&] {
    while (i < lines.size() && (blank(lines[i].text) || trim(lines[i].text).front() == '%')) ++i;
  };
  skip_comments();
  if (i == lines.size()) throw ParseError(lines.size() + 1, "missing size line");
  const auto size = tokens(lines[i].text);
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  if (size.size() != 3 || !parse_int(size[0], rows) || !parse_int(size[1], cols) || !parse_int(size[2], nnz)) {
    throw ParseError(lines[i].number, "size line must be three non-negative integers");
  }
  if (rows != cols) {
    throw ParseError(lines[i].number, fmt::format("matrix is {}x{}, an adjacency matrix must be square", rows, cols));
  }
  if (rows > 0xffffffffULL) throw ParseError(lines[i].number, "too many rows");
  ++i;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::size_t diagonal = 0, seen = 0;
  for (; i < lines.size(); ++i) {
    const std::string_view t = trim(lines[i].text);
    if (t.empty() || t.front() == '%') continue;
    const std::size_t ln = lines[i].number;
    if (seen == nnz) throw ParseError(ln, fmt::format("more entries than the declared {}", nnz));
    const auto tok = tokens(t);
    if (tok.size() != 2 + values) {
      throw ParseError(ln, fmt::format("expected {} fields for a {} entry, got {}", 2 + values, field, tok.size()));
    }
    std::uint64_t r = 0, c = 0;
    if (!parse_int(tok[0], r) || !parse_int(tok[1], c)) throw ParseError(ln, "entry indices must be integers");
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw ParseError(ln, fmt::format("entry ({}, {}) outside a {}x{} matrix", r, c, rows, cols));
    }
    for (std::size_t v = 0; v < values; ++v) {
      double x = 0;
      std::int64_t k = 0;
      const bool ok = field == "integer" ? parse_int(tok[2 + v], k) : parse_double(tok[2 + v], x);
      if (!ok) throw ParseError(ln, "bad " + field + " value " + quoted(tok[2 + v]));
    }
    ++seen;
    if (r == c) {
      ++diagonal;
      continue;
    }
    pairs.emplace_back(static_cast<NodeId>(std::min(r, c) - 1), static_cast<NodeId>(std::max(r, c) - 1));
  }
  if (seen < nnz) {
    throw ParseError(lines.size() + 1, fmt::format("file ends after {} of {} declared entries", seen, nnz));
  }
  if (diagonal > 0) out.warnings.push_back(fmt::format("dropped {} diagonal entries", diagonal));
  out.graph = finish(rows, pairs);
  return out;
}

ParsedGraph parse_chaco(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto is_comment = [&](std::size_t k) {
    const auto t = trim(lines[k].text);
    return !t.empty() && t.front() == '%';
  };
  while (i < lines.size() && (is_comment(i) || blank(lines[i].text))) ++i;
  if (i == lines.size()) throw ParseError(lines.size() + 1, "missing header line");
  const std::size_t header_line = lines[i].number;
  const auto head = tokens(lines[i].text);
  std::uint64_t n = 0, m = 0, ncon = 1;
  if (head.size() < 2 || head.size() > 4 || !parse_int(head[0], n) || !parse_int(head[1], m)) {
    throw ParseError(header_line, "header must be 'nodes edges [fmt [ncon]]'");
  }
  if (n > 0xffffffffULL) throw ParseError(header_line, "too many nodes");
  bool vsize = false, vweight = false, eweight = false;
  if (head.size() >= 3) {
    const std::string_view f = head[2];
    if (f.size() > 3 || f.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(header_line, "fmt must be up to three 0/1 digits, got " + quoted(f));
    }
    const std::string padded = std::string(3 - f.size(), '0') + std::string(f);
    vsize = padded[0] == '1';
    vweight = padded[1] == '1';
    eweight = padded[2] == '1';
  }
  if (head.size() == 4) {
    if (!parse_int(head[3], ncon) || ncon == 0) throw ParseError(header_line, "ncon must be a positive integer");
    if (!vweight) throw ParseError(header_line, "ncon given without vertex weights in fmt");
  }
  const std::size_t skip = (vsize ? 1 : 0) + (vweight ? ncon : 0);

  ParsedGraph out;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::size_t self_loops = 0;
  std::uint64_t v = 0;
  ++i;
  for (; i < lines.size() && v < n; ++i) {
    if (is_comment(i)) continue;
    const std::size_t ln = lines[i].number;
    const auto tok = tokens(lines[i].text);
    if (tok.size() < skip) throw ParseError(ln, fmt::format("vertex {} is missing its weights", v + 1));
    for (std::size_t k = 0; k < skip; ++k) {
      double x = 0;
      if (!parse_double(tok[k], x)) throw ParseError(ln, "bad vertex weight " + quoted(tok[k]));
    }
    const std::size_t stride = eweight ? 2 : 1;
    if ((tok.size() - skip) % stride != 0) throw ParseError(ln, "neighbour without an edge weight");
    for (std::size_t k = skip; k < tok.size(); k += stride) {
      std::uint64_t u = 0;
      if (!parse_int(tok[k], u)) throw ParseError(ln, "neighbour id " + quoted(tok[k]) + " is not an integer");
      if (u < 1 || u > n) {
        throw ParseError(ln, fmt::format("neighbour id {} outside 1..{} (ids are 1-indexed)", u, n));
      }
      if (eweight) {
        double x = 0;
        if (!parse_double(tok[k + 1], x)) throw ParseError(ln, "bad edge weight " + quoted(tok[k + 1]));
      }
      if (u - 1 == v) {
        ++self_loops;
        continue;
      }
      pairs.emplace_back(static_cast<NodeId>(std::min(u - 1, v)), static_cast<NodeId>(std::max(u - 1, v)));
    }
    ++v;
  }
  if (v < n) {
    throw ParseError(lines.size() + 1, fmt::format("expected {} vertex lines, found {}", n, v));
  }
  for (; i < lines.size(); ++i) {
    if (!is_comment(i) && !blank(lines[i].text)) {
      throw ParseError(lines[i].number, fmt::format("unexpected content after {} vertex lines", n));
    }
  }

  // Each undirected edge should be listed from both ends.
  std::sort(pairs.begin(), pairs.end());
  std::size_t one_sided = 0;
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t e = k;
    while (e < pairs.size() && pairs[e] == pairs[k]) ++e;
    if (e - k == 1) ++one_sided;
    k = e;
  }
  if (self_loops > 0) out.warnings.push_back(fmt::format("dropped {} self-loop entries", self_loops));
  if (one_sided > 0) out.warnings.push_back(fmt::format("{} edges listed from one end only", one_sided));
  out.graph = finish(n, pairs);
  if (out.graph.edge_count() != m) {
    out.warnings.push_back(
        fmt::format("header declares {} edges, found {} after merging duplicates", m, out.graph.edge_count()));
  }
  return out;
}

ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph out;
  std::unordered_map<std::int64_t, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::size_t self_loops = 0;
  std::optional<std::uint64_t> declared_nodes;
  auto id_of = [&](std::int64_t raw) {
    const auto [it, added] = ids.try_emplace(raw, static_cast<NodeId>(ids.size()));
    return it->second;
  };
  for (const Line& line : split_lines(text)) {
    const std::string_view t = trim(line.text);
    if (t.empty()) continue;
    if (t.front() == '%' || t.front() == '#') {
      const auto tok = tokens(t.substr(1));
      std::uint64_t nn = 0;
      if (tok.size() == 2 && tok[0] == "nodes" && parse_int(tok[1], nn)) declared_nodes = nn;
      continue;
    }
    const auto tok = tokens(t);
    if (tok.size() < 2) throw ParseError(line.number, "expected two node ids");
    std::int64_t a = 0, b = 0;
    if (!parse_int(tok[0], a)) throw ParseError(line.number, "node id " + quoted(tok[0]) + " is not an integer");
    if (!parse_int(tok[1], b)) throw ParseError(line.number, "node id " + quoted(tok[1]) + " is not an integer");
    for (std::size_t k = 2; k < tok.size(); ++k) {
      double x = 0;
      if (!parse_double(tok[k], x)) throw ParseError(line.number, "extra column " + quoted(tok[k]) + " is not numeric");
    }
    const NodeId u = id_of(a), v = id_of(b);
    if (u == v) {
      ++self_loops;
      continue;
    }
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::size_t n = ids.size();
  if (declared_nodes) {
    // Files from write_edge_list number nodes 0..N-1; keep trailing isolated ones.
    bool dense = true;
    for (const auto& [raw, id] : ids) dense = dense && raw >= 0 && static_cast<std::uint64_t>(raw) < *declared_nodes;
    if (dense && *declared_nodes >= n) {
      // Renumber by raw id so the round trip is the identity.
      std::vector<NodeId> to_raw(ids.size());
      for (const auto& [raw, id] : ids) to_raw[id] = static_cast<NodeId>(raw);
      for (auto& [u, v] : pairs) {
        const NodeId a = to_raw[u], b = to_raw[v];
        u = std::min(a, b);
        v = std::max(a, b);
      }
      n = *declared_nodes;
    }
  }
  if (self_loops > 0) out.warnings.push_back(fmt::format("dropped {} self-loops", self_loops));
  out.graph = finish(n, pairs);
  return out;
}

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  const std::string s = lower(name);
  if (s == "mtx" || s == "matrix-market") return GraphFormat::kMatrixMarket;
  if (s == "chaco" || s == "metis" || s == "graph") return GraphFormat::kChaco;
  if (s == "edges" || s == "edge-list" || s == "txt") return GraphFormat::kEdgeList;
  return std::nullopt;
}

GraphFormat graph_format_for(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".mtx") return GraphFormat::kMatrixMarket;
  if (ext == ".graph" || ext == ".chaco" || ext == ".metis") return GraphFormat::kChaco;
  return GraphFormat::kEdgeList;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

ParsedGraph read_graph(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  const std::string text = read_text_file(path);
  try {
    switch (format.value_or(graph_format_for(path))) {
      case GraphFormat::kMatrixMarket:
        return parse_matrix_market(text);
      case GraphFormat::kChaco:
        return parse_chaco(text);
      case GraphFormat::kEdgeList:
        return parse_edge_list(text);
    }
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.line(), e.message());
  }
  throw InvalidArgument("unknown graph format");
}

std::string write_edge_list(const Graph& g) {
  std::string out = fmt::format("% nodes {}\n", g.node_count());
  for (const Edge& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
  return out;
}

Layout parse_layout_csv(std::string_view text, std::size_t node_count) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i].text)) ++i;
  auto fields = [](std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      const std::size_t c = s.find(',', start);
      out.push_back(trim(s.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start)));
      if (c == std::string_view::npos) break;
      start = c + 1;
    }
    return out;
  };
  if (i == lines.size()) throw ParseError(1, "empty layout file, expected header node,x,y");
  const auto head = fields(lines[i].text);
  if (head.size() != 3 || head[0] != "node" || head[1] != "x" || head[2] != "y") {
    throw ParseError(lines[i].number, "header must be node,x,y");
  }
  std::vector<Point> pos(node_count);
  std::vector<bool> have(node_count, false);
  std::size_t rows = 0;
  for (++i; i < lines.size(); ++i) {
    if (blank(lines[i].text)) continue;
    const std::size_t ln = lines[i].number;
    const auto f = fields(lines[i].text);
    if (f.size() != 3) throw ParseError(ln, "expected node,x,y");
    std::uint64_t id = 0;
    double x = 0, y = 0;
    if (!parse_int(f[0], id)) throw ParseError(ln, "node id " + quoted(f[0]) + " is not a non-negative integer");
    if (!parse_double(f[1], x) || !parse_double(f[2], y)) throw ParseError(ln, "coordinates must be numbers");
    if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(ln, fmt::format("node {} has a non-finite coordinate", id));
    if (id >= node_count) throw ParseError(ln, fmt::format("node {} outside 0..{}", id, node_count == 0 ? 0 : node_count - 1));
    if (have[id]) throw ParseError(ln, fmt::format("node {} appears twice", id));
    have[id] = true;
    pos[id] = {x, y};
    ++rows;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    if (!have[v]) throw ParseError(0, fmt::format("layout has {} rows for {} nodes; node {} is missing", rows, node_count, v));
  }
  return Layout(std::move(pos));
}

std::string write_layout_csv(const Layout& layout) {
  std::string out = "node,x,y\n";
  for (std::size_t i = 0; i < layout.size(); ++i) out += fmt::format("{},{:.17g},{:.17g}\n", i, layout[i].x, layout[i].y);
  return out;
}

Layout read_layout(const std::filesystem::path& path, std::size_t node_count) {
  const std::string text = read_text_file(path);
  try {
    return parse_layout_csv(text, node_count);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.line(), e.message());
  }
}

void write_layout(const std::filesystem::path& path, const Layout& layout) {
  write_text_file(path, write_layout_csv(layout));
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  const std::string s = lower(name);
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  return std::nullopt;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

std::string format_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  const bool raster = std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.raster_ink.has_value(); });
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ReportRow& r : rows) {
      nlohmann::ordered_json o;
      o["graph_name"] = r.graph_name;
      o["layout_name"] = r.layout_name;
      o["n"] = r.n;
      o["m"] = r.m;
      o["r"] = r.r;
      o["w"] = r.w;
      o["gamma"] = r.gamma;
      o["L"] = r.L;
      o["cr"] = r.cr;
      o["A"] = r.A;
      o["ink"] = r.ink;
      o["density"] = r.density;
      o["feasible"] = r.feasible;
      if (raster) o["raster_ink"] = r.raster_ink ? nlohmann::ordered_json(*r.raster_ink) : nlohmann::ordered_json();
      o["log10_ink"] = r.ink > 0 ? nlohmann::ordered_json(std::log10(r.ink)) : nlohmann::ordered_json();
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "graph_name,layout_name,n,m,r,w,gamma,L,cr,A,ink,density,feasible";
  if (raster) out += ",raster_ink";
  out += ",log10_ink\n";
  for (const ReportRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", csv_field(r.graph_name), csv_field(r.layout_name), r.n,
                       r.m, num(r.r), num(r.w), num(r.gamma), num(r.L), r.cr, num(r.A), num(r.ink), num(r.density),
                       r.feasible ? "true" : "false");
    if (raster) out += "," + (r.raster_ink ? num(*r.raster_ink) : std::string());
    out += "," + (r.ink > 0 ? num(std::log10(r.ink)) : std::string()) + "\n";
  }
  return out;
}

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::filesystem::path& path) {
  if (rows.empty()) throw InvalidArgument("a report needs at least one row");
  write_text_file(path, format_report(rows, format));
}

}  // namespace inka
