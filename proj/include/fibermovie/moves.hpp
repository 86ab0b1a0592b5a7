#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibermovie/slice.hpp"

namespace fibermovie {

enum class LocalModelId {
  ArrowX,
  ArrowCenter,
  ArrowBoundaryTangency,
  ArrowBoundaryPoint,
  Model1,
  Model2,
  Model3,
  Model4,
  Model5,
  Model6,
  Model7,
  Model8,
  Unmatched,
};

std::string to_string(LocalModelId id);

/// What happens to the cross-section of a fiber F^{-1}(theta) during one move.
enum class EffectKind { None, Saddle, ArcBirth, ArcDeath, BoundaryMinMark, BoundaryMaxMark };

std::string to_string(EffectKind kind);
EffectKind effect_kind_from_string(const std::string& text);

/// Partition of the circle into open arcs, each carrying one effect. kinds[k] applies on
/// (cuts[k], cuts[k+1]); with no cuts, kinds holds the single effect of the whole circle.
struct FiberEffect {
  std::vector<Angle> cuts;
  std::vector<EffectKind> kinds;

  static FiberEffect uniform(EffectKind kind) { return {{}, {kind}}; }
  /// `inside` on the open arc, `outside` elsewhere. An empty arc (lo == hi with zero length) is not allowed.
  static FiberEffect on_interval(const ArcInterval& arc, EffectKind inside, EffectKind outside);

  bool is_partition() const;
  EffectKind at(const Angle& theta) const;  // throws SingularAngle on a cut
  friend bool operator==(const FiberEffect&, const FiberEffect&) = default;
};

/// Core of a band: an arc from a leaf back to the same leaf across one x-singularity.
struct EtaSpec {
  int singularity = 0;
  Angle endpoint;          // common theta of both endpoints
  Rational first_half;     // winding of f along the first half of the arc
  Rational second_half;    // winding along the second half; balanced iff first_half == -second_half
  int crossings_first = 0;  // times the arc meets the endpoint leaf on each side of the singularity
  int crossings_second = 0;

  Rational winding() const { return first_half; }
  friend bool operator==(const EtaSpec&, const EtaSpec&) = default;
};

enum class MoveKind { MeridionalStart, RotationIsotopy, MinMovie, MaxMovie, BandMovie, CrossingMove, CapOff };

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& text);

struct MoveRecord {
  MoveKind kind = MoveKind::MeridionalStart;
  int index = 0;  // row for rotation/min/max, generator for crossings
  int sign = 0;
  bool first_occurrence = false;
  std::optional<EtaSpec> eta;
  Rational t_begin;
  Rational t_end;
  int before = 0;  // slice ids inside a Movie
  int after = 0;
  FiberEffect effects = FiberEffect::uniform(EffectKind::None);

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

using MoveResult = std::pair<SliceFibration, MoveRecord>;

MoveResult meridional_start(const SliceFibration& sf);
SliceFibration rotate_pair(const SliceFibration& sf, int row, int sign);
MoveResult rotation_record(const SliceFibration& sf, int row, int sign);
MoveResult min_movie(const SliceFibration& sf, int row);
MoveResult max_movie(const SliceFibration& sf, int row);
MoveResult band_movie(const SliceFibration& sf, const EtaSpec& eta);

/// Band arc for crossing sigma_j^sign; throws PatternMismatch when the slice does not match the
/// first-occurrence or repeat before-pattern.
EtaSpec crossing_eta(const SliceFibration& sf, int j, int sign, bool first_occurrence);
MoveResult crossing_move(const SliceFibration& sf, int j, int sign, bool first_occurrence);
MoveResult cap_off(const SliceFibration& sf);

/// Replays a record's declared move on `before`. Used by movie validation.
MoveResult replay(const SliceFibration& before, const MoveRecord& record);

std::vector<LocalModelId> classify_event(const MoveRecord& m);

/// Left rows whose circles carry the two left germs of x.
std::pair<int, int> left_germ_rows(const XSingularity& x);

/// Singularities of the pair joining rows j and j+1.
std::vector<const XSingularity*> pair_singularities(const SliceFibration& sf, int j);

}  // namespace fibermovie
