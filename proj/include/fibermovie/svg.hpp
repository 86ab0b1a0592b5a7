#pragma once

#include <string>
#include <vector>

#include "fibermovie/fiber.hpp"

namespace fibermovie {

struct RenderStyle {
  double canvas = 1000.0;
  double max_row_pitch = 220.0;
  double max_circle_radius = 60.0;
  double arrow_length = 22.0;
  int regular_leaves = 4;  // thin leaves drawn at evenly spaced regular angles
};

/// Contour map of a slice: boundary circles on the grid, thin regular leaves, bold singular leaves with
/// outward arrows.
std::string render_slice_svg(const SliceFibration& sf, const RenderStyle& style = {});

/// Cross-section strip of one fiber with its events and invariants.
std::string render_fiber_svg(const FiberSurface& fs, const FiberSample& sample, const RenderStyle& style = {});

struct Frame {
  Rational t;
  int record = -1;  // record whose segment this frame lies in, -1 for the final boundary
  SliceFibration slice;
};

/// Segment boundaries plus per_segment - 1 intermediate frames inside each segment, in time order.
std::vector<Frame> movie_frames(const Movie& m, int per_segment);

/// One line per frame: time, circle count, singularity count, leaf component count.
std::string frame_summary(const std::vector<Frame>& frames);

}  // namespace fibermovie
