#pragma once

#include <string>
#include <vector>

#include "fibermovie/braid.hpp"
#include "fibermovie/moves.hpp"

namespace fibermovie {

/// Segment boundaries of the movie. Crossing i runs on [crossing_times[i-1], crossing_times[i]].
struct Timeline {
  Rational cap_begin{-1};
  Rational step1_begin{0};
  std::vector<Rational> crossing_times{Rational(1), Rational(2)};
  Rational step3_end{3};
  Rational cap_end{4};
  int letters = 0;  // crossing segments; the empty word still spans [1, 2]

  int crossings() const { return letters; }
  /// Every boundary in increasing order.
  std::vector<Rational> boundaries() const;
  friend bool operator==(const Timeline&, const Timeline&) = default;
};

struct Movie {
  BraidWord braid;
  HomogeneitySignature signature;
  Timeline timeline;
  std::vector<MoveRecord> records;
  std::vector<SliceFibration> slices;  // slices[k] before records[k], slices.back() after the last

  const SliceFibration& final_slice() const { return slices.back(); }
  friend bool operator==(const Movie&, const Movie&) = default;
};

struct RecordCheck {
  int index = 0;
  std::vector<LocalModelId> models;
  bool arrow_ok = true;   // time derivative consistent with decorations
  bool model_ok = true;   // slice-surface event matches a local model
  std::string message;
};

struct MovieValidation {
  std::vector<RecordCheck> records;
  bool arrows_consistent = true;
  bool events_modeled = true;
  bool ends_capped = true;
  std::vector<std::string> problems;

  bool pass() const { return arrows_consistent && events_modeled && ends_capped; }
};

Timeline build_timeline(const BraidWord& w);

Movie run_step1(const BraidWord& w);
Movie run_step2(Movie partial, const BraidWord& w);
Movie run_step3(Movie partial);
Movie build_movie(const BraidWord& w);

MovieValidation validate_movie(const Movie& m);

/// Slice alive during crossing segments (first slice after Step 1), if any.
const SliceFibration& middle_slice(const Movie& m);

}  // namespace fibermovie
