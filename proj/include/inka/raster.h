#pragma once

// Pixel-counting ink measurement and an SVG exporter.

#include <cstdint>
#include <filesystem>
#include <string>

#include "inka/model.h"

namespace inka {

struct RasterConfig {
  int resolution = 2048;  // pixels along the longer side of the bounding box
  int supersampling = 2;  // 1, 2 or 4 samples per pixel side

  void validate() const;  // throws InvalidArgument
};

struct RasterResult {
  double area = 0.0;        // painted samples times sample area
  double sample_size = 0.0; // side of one sample in drawing units
  std::int64_t samples = 0; // painted sample count
};

// Paints every disk and every butt-capped edge rectangle as a union and
// counts the sample points covered. Throws InvalidArgument for an empty graph
// or a bounding box with no extent.
RasterResult rasterize(const BoldDrawing& d, const RasterConfig& cfg = {});
double rasterize_ink(const BoldDrawing& d, const RasterConfig& cfg = {});

// SVG 1.1: edges as butt-capped lines of stroke width w, then disks.
// The y axis points up as in the drawing.
std::string render_svg(const BoldDrawing& d);
void render_svg(const BoldDrawing& d, const std::filesystem::path& path);

}  // namespace inka
