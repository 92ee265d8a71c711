#pragma once

#include <string>

#include "mdopt/mechanisms.hpp"

namespace mdopt {

// Deterministic SVG pictures of buyer-type space: winning regions colored by
// run-length rastering, curve and price-line overlays for partitions.
struct RenderOptions {
  int width = 800;
  int height = 800;
  int raster = 240;  // classification rows/columns
  int margin = 48;
};

std::string render_menu_svg(const Menu& menu, const Box& box,
                            const RenderOptions& options = {});

std::string render_partition_svg(const Partition2D& partition,
                                 const RenderOptions& options = {});

}  // namespace mdopt
