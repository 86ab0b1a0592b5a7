#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibermovie/construction.hpp"

namespace fibermovie {

struct FiberEvent {
  EffectKind kind = EffectKind::None;
  int record = 0;
  friend bool operator==(const FiberEvent&, const FiberEvent&) = default;
};

/// F^{-1}(theta) swept out by its cross-sections as the movie runs.
struct FiberSurface {
  Angle theta;
  std::vector<FiberEvent> events;                          // every non-None effect, in time order
  std::vector<std::vector<LeafComponent>> cross_sections;  // one per movie slice
  int tracks = 0;                                          // boundary point tracks on the link
  std::vector<std::pair<int, int>> boundary_joins;         // tracks meeting at births and deaths
  std::vector<std::pair<int, int>> arc_joins;              // tracks joined by some cross-section arc
};

struct MorseProfile {
  int interior_min = 0;
  int interior_saddle = 0;
  int interior_max = 0;
  int boundary_min = 0;
  int boundary_max = 0;
  friend bool operator==(const MorseProfile&, const MorseProfile&) = default;
};

std::vector<Angle> sample_regular_angles(const Movie& m, int k);

FiberSurface extract_fiber(const Movie& m, const Angle& theta);

int euler_characteristic(const FiberSurface& fs);
int boundary_components(const FiberSurface& fs);
int fiber_components(const FiberSurface& fs);
MorseProfile morse_profile(const FiberSurface& fs);

struct FiberSample {
  Angle theta;
  int chi = 0;
  int boundary = 0;
  int components = 0;
  std::optional<int> genus;
  MorseProfile profile;
  int events = 0;
  friend bool operator==(const FiberSample&, const FiberSample&) = default;
};

FiberSample sample_fiber(const Movie& m, const Angle& theta);

struct FiberReport {
  BraidWord braid;
  ClassicalInvariants oracle;
  std::vector<FiberSample> samples;
  bool consistent = true;        // chi, boundary count and cap counts agree across samples
  bool matches_oracle = true;    // chi and boundary count equal the braid invariants
  bool morse_statement = true;   // no interior extrema, b boundary minima and maxima
  bool saddle_count = true;      // interior saddles equal b + c
};

/// Parallel over sampled angles; identical output to fiber_report_serial.
FiberReport fiber_report(const Movie& m, int k);
FiberReport fiber_report_serial(const Movie& m, int k);

}  // namespace fibermovie
