#pragma once

// Derived drawings: scaled layouts, zoomed drawings and partial-edge stubs.

#include <cstdint>
#include <vector>

#include "inka/geometry.h"
#include "inka/ink.h"
#include "inka/model.h"

namespace inka {

// Positions multiplied by sigma about the centroid. Throws for sigma <= 0.
Layout scale_layout(const Layout& layout, double sigma);

// Positions (about the centroid), radius and width multiplied by sqrt(zeta).
BoldDrawing zoom_drawing(const BoldDrawing& d, double zeta);

struct StubSet {
  std::vector<Segment> segments;
  std::vector<std::size_t> parent;  // edge index of each segment
  std::vector<Edge> parent_edges;   // copy of the graph's edges, indexed by parent
  double ratio = 1.0;

  double total_length() const;
};

// Two stubs of length p*l/2 at the ends of every edge. For p == 1 each edge is
// kept whole as a single segment.
StubSet partial_edges(const BoldDrawing& d, double p);

// Proper crossings between stubs. Stubs of one edge never cross each other and
// stubs of adjacent edges only touch at the shared node.
std::int64_t measure_stub_crossings(const StubSet& stubs);

// The aggregate ink formula evaluated on the measured stub geometry.
InkComponents stub_ink(const BoldDrawing& d, const StubSet& stubs, std::int64_t stub_crossings);

}  // namespace inka
