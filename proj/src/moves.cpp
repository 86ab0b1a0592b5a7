#include "fibermovie/moves.hpp"

#include <algorithm>
#include <map>

#include "fibermovie/error.hpp"

namespace fibermovie {

std::string to_string(LocalModelId id) {
  switch (id) {
    case LocalModelId::ArrowX: return "ArrowX";
    case LocalModelId::ArrowCenter: return "ArrowCenter";
    case LocalModelId::ArrowBoundaryTangency: return "ArrowBoundaryTangency";
    case LocalModelId::ArrowBoundaryPoint: return "ArrowBoundaryPoint";
    case LocalModelId::Model1: return "Model(i)";
    case LocalModelId::Model2: return "Model(ii)";
    case LocalModelId::Model3: return "Model(iii)";
    case LocalModelId::Model4: return "Model(iv)";
    case LocalModelId::Model5: return "Model(v)";
    case LocalModelId::Model6: return "Model(vi)";
    case LocalModelId::Model7: return "Model(vii)";
    case LocalModelId::Model8: return "Model(viii)";
    case LocalModelId::Unmatched: return "Unmatched";
  }
  return "Unmatched";
}

namespace {

const std::pair<EffectKind, const char*> kEffectNames[] = {
    {EffectKind::None, "None"},
    {EffectKind::Saddle, "Saddle"},
    {EffectKind::ArcBirth, "ArcBirth"},
    {EffectKind::ArcDeath, "ArcDeath"},
    {EffectKind::BoundaryMinMark, "BoundaryMinMark"},
    {EffectKind::BoundaryMaxMark, "BoundaryMaxMark"},
};

const std::pair<MoveKind, const char*> kMoveNames[] = {
    {MoveKind::MeridionalStart, "MeridionalStart"},
    {MoveKind::RotationIsotopy, "RotationIsotopy"},
    {MoveKind::MinMovie, "MinMovie"},
    {MoveKind::MaxMovie, "MaxMovie"},
    {MoveKind::BandMovie, "BandMovie"},
    {MoveKind::CrossingMove, "CrossingMove"},
    {MoveKind::CapOff, "CapOff"},
};

}  // namespace

std::string to_string(EffectKind kind) {
  for (const auto& [k, name] : kEffectNames) {
    if (k == kind) return name;
  }
  return "None";
}

EffectKind effect_kind_from_string(const std::string& text) {
  for (const auto& [k, name] : kEffectNames) {
    if (text == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown fiber effect '" + text + "'");
}

std::string to_string(MoveKind kind) {
  for (const auto& [k, name] : kMoveNames) {
    if (k == kind) return name;
  }
  return "MeridionalStart";
}

MoveKind move_kind_from_string(const std::string& text) {
  for (const auto& [k, name] : kMoveNames) {
    if (text == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown move kind '" + text + "'");
}

FiberEffect FiberEffect::on_interval(const ArcInterval& arc, EffectKind inside, EffectKind outside) {
  if (arc.lo == arc.hi) throw Error(ErrorCode::PatternMismatch, "degenerate effect interval");
  if (arc.lo < arc.hi) return {{arc.lo, arc.hi}, {inside, outside}};
  return {{arc.hi, arc.lo}, {outside, inside}};
}

bool FiberEffect::is_partition() const {
  if (kinds.size() != std::max<std::size_t>(1, cuts.size())) return false;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    if (!(cuts[k - 1] < cuts[k])) return false;
  }
  return true;
}

EffectKind FiberEffect::at(const Angle& theta) const {
  if (cuts.empty()) return kinds.front();
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (cuts[k] == theta) throw Error(ErrorCode::SingularAngle, "theta " + theta.str() + " is an effect boundary");
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const ArcInterval piece{cuts[k], cuts[(k + 1) % cuts.size()]};
    if (piece.contains(theta)) return kinds[k];
  }
  return kinds.front();
}

std::pair<int, int> left_germ_rows(const XSingularity& x) {
  std::vector<int> rows;
  for (const auto& g : x.germs) {
    if (g.column == Column::Left) rows.push_back(g.row);
  }
  if (rows.size() != 2) throw Error(ErrorCode::MalformedSingularity, "singularity without two left germs");
  return {std::min(rows[0], rows[1]), std::max(rows[0], rows[1])};
}

std::vector<const XSingularity*> pair_singularities(const SliceFibration& sf, int j) {
  std::vector<const XSingularity*> out;
  for (const auto& x : sf.xsings) {
    if (x.germs.size() == 4 && left_germ_rows(x) == std::pair{j, j + 1}) out.push_back(&x);
  }
  return out;
}

namespace {

/// Leaf arcs as a piecewise-constant function of theta.
struct Piecewise {
  std::vector<Angle> cuts;
  std::vector<std::vector<int>> pieces;

  static Piecewise of(const SliceFibration& sf) {
    Piecewise pw;
    pw.cuts = singular_values(sf);
    for (const auto& c : sf.chambers) pw.pieces.push_back(c.targets);
    if (pw.pieces.empty()) pw.pieces.emplace_back();
    return pw;
  }

  Angle representative(std::size_t k) const {
    if (cuts.empty()) return Angle(1, 2);
    return Angle::forward_midpoint(cuts[k], cuts[(k + 1) % cuts.size()]);
  }

  void add_cut(const Angle& a) {
    if (std::find(cuts.begin(), cuts.end(), a) != cuts.end()) return;
    if (cuts.empty()) {
      cuts = {a};
      return;
    }
    std::size_t k = 0;
    for (; k < cuts.size(); ++k) {
      if (ArcInterval{cuts[k], cuts[(k + 1) % cuts.size()]}.contains(a)) break;
    }
    // piece k is (cuts[k], cuts[k+1]); split into (cuts[k], a) and (a, cuts[k+1]).
    cuts.insert(cuts.begin() + static_cast<long>(k) + 1, a);
    pieces.insert(pieces.begin() + static_cast<long>(k) + 1, pieces[k]);
    // Keep cuts sorted: rotate if the insertion wrapped past zero.
    std::vector<std::pair<Angle, std::vector<int>>> zipped;
    for (std::size_t i = 0; i < cuts.size(); ++i) zipped.emplace_back(cuts[i], pieces[i]);
    std::sort(zipped.begin(), zipped.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      cuts[i] = zipped[i].first;
      pieces[i] = zipped[i].second;
    }
  }

  void remove_cut_at(std::size_t k) {
    // merge piece k-1 and piece k; pieces must agree.
    cuts.erase(cuts.begin() + static_cast<long>(k));
    pieces.erase(pieces.begin() + static_cast<long>(k));
    if (cuts.empty()) pieces.resize(1);
  }

  void coalesce() {
    bool changed = true;
    while (changed && !cuts.empty()) {
      changed = false;
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        const auto& below = pieces[(k + cuts.size() - 1) % cuts.size()];
        if (below == pieces[k]) {
          if (cuts.size() == 1) {
            cuts.clear();
            pieces.resize(1);
          } else {
            remove_cut_at(k);
          }
          changed = true;
          break;
        }
      }
    }
  }

  template <typename Fn>
  void transform(Fn&& fn) {
    for (std::size_t k = 0; k < pieces.size(); ++k) fn(representative(k), pieces[k]);
  }
};

struct Decoration {
  int id;
  OutwardAxis axis;
};

/// Installs the piecewise leaves into `out`. Singularities keep their id and decoration when the
/// cut already carried one in `previous`; `fresh` supplies the rest.
void install(SliceFibration& out, const Piecewise& pw, const SliceFibration& previous,
             const std::map<Angle, Decoration>& fresh) {
  out.chambers.clear();
  out.xsings.clear();
  if (out.rows == 0) return;
  if (pw.cuts.empty()) {
    out.chambers.push_back({ArcInterval{Angle(), Angle()}, pw.pieces.front(), 0});
    return;
  }
  const std::size_t n = pw.cuts.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.chambers.push_back({ArcInterval{pw.cuts[k], pw.cuts[(k + 1) % n]}, pw.pieces[k], 0});
    const auto& below = pw.pieces[(k + n - 1) % n];
    const auto germs = transition_germs(below, pw.pieces[k]);
    if (!germs) {
      throw Error(ErrorCode::PatternMismatch,
                  "leaves change by more than one band surgery at theta " + pw.cuts[k].str());
    }
    XSingularity x;
    x.theta = pw.cuts[k];
    x.germs = *germs;
    if (auto it = fresh.find(pw.cuts[k]); it != fresh.end()) {
      x.id = it->second.id;
      x.outward_axis = it->second.axis;
    } else {
      const XSingularity* old = nullptr;
      for (const auto& y : previous.xsings) {
        if (y.theta == pw.cuts[k]) old = &y;
      }
      if (old == nullptr) {
        throw Error(ErrorCode::PatternMismatch, "unexpected singularity at theta " + pw.cuts[k].str());
      }
      x.id = old->id;
      x.outward_axis = old->outward_axis;
    }
    out.xsings.push_back(x);
  }
  sort_xsings(out);
}

std::vector<Angle> sorted_values(const SliceFibration& sf) { return singular_values(sf); }

Angle predecessor(const std::vector<Angle>& values, const Angle& v) {
  auto it = std::find(values.begin(), values.end(), v);
  const std::size_t k = static_cast<std::size_t>(it - values.begin());
  return values[(k + values.size() - 1) % values.size()];
}

Angle successor(const std::vector<Angle>& values, const Angle& v) {
  auto it = std::find(values.begin(), values.end(), v);
  const std::size_t k = static_cast<std::size_t>(it - values.begin());
  return values[(k + 1) % values.size()];
}

/// The two singularities of pair (j, j+1) and the arc between them where Left(j) is joined to
/// Right(j+1) ("crossed").
struct PairLayout {
  const XSingularity* entry;
  const XSingularity* exit;
  ArcInterval crossed;
};

PairLayout pair_layout(const SliceFibration& sf, int j, int crossed_row_of_left_j) {
  const auto xs = pair_singularities(sf, j);
  if (xs.size() != 2) {
    throw Error(ErrorCode::PatternMismatch,
                "pair " + std::to_string(j) + " carries " + std::to_string(xs.size()) + " singularities");
  }
  const ArcInterval a{xs[0]->theta, xs[1]->theta};
  const auto after_first = std::find_if(sf.chambers.begin(), sf.chambers.end(),
                                        [&](const Chamber& c) { return c.span.lo == a.lo; });
  if (after_first == sf.chambers.end()) throw Error(ErrorCode::InvalidSlice, "no chamber above a singularity");
  const bool first_is_entry = after_first->targets[j - 1] == crossed_row_of_left_j;
  if (first_is_entry) return {xs[0], xs[1], a};
  return {xs[1], xs[0], ArcInterval{xs[1]->theta, xs[0]->theta}};
}

SliceFibration with_rows(const SliceFibration& sf, int rows) {
  SliceFibration out = sf;
  out.rows = rows;
  out.circles.clear();
  for (int r = 1; r <= rows; ++r) {
    out.circles.push_back({CircleLabel::left(r), 1, Rational(0)});
    out.circles.push_back({CircleLabel::right(r), -1, Rational(0)});
  }
  return out;
}

}  // namespace

MoveResult meridional_start(const SliceFibration& sf) {
  if (sf.rows != 0) throw Error(ErrorCode::PatternMismatch, "meridional start needs the empty cap");
  MoveRecord rec;
  rec.kind = MoveKind::MeridionalStart;
  rec.effects = FiberEffect::uniform(EffectKind::ArcBirth);
  SliceFibration out = initial_annulus_fibration();
  out.next_id = sf.next_id;
  return {out, rec};
}

SliceFibration rotate_pair(const SliceFibration& sf, int row, int sign) {
  if (sf.rows < 1 || row < 1 || row > sf.rows + 1) {
    throw Error(ErrorCode::NoSuchRow, "no grid cell beneath row " + std::to_string(row));
  }
  if (sign != 1 && sign != -1) throw Error(ErrorCode::PatternMismatch, "rotation sign must be +1 or -1");
  SliceFibration out = sf;
  out.twist[row - 1] += sign;
  return out;
}

MoveResult rotation_record(const SliceFibration& sf, int row, int sign) {
  MoveRecord rec;
  rec.kind = MoveKind::RotationIsotopy;
  rec.index = row;
  rec.sign = sign;
  return {rotate_pair(sf, row, sign), rec};
}

MoveResult min_movie(const SliceFibration& sf, int row) {
  if (sf.rows < 1 || row != sf.rows + 1) {
    throw Error(ErrorCode::PatternMismatch, "a minimum can only open beneath the lowest row");
  }
  const int tw = sf.twist[row - 1];
  if (tw > 1 || tw < -1) throw Error(ErrorCode::PatternMismatch, "more than a half turn beneath the row");
  const int sign = tw < 0 ? -1 : 1;
  const int pair = row - 1;
  if (pair > 60) throw Error(ErrorCode::PatternMismatch, "too many rows");

  // Pair k lives in the sector [1 - 2^{1-k}, 1 - 2^{-k}); the sign picks its half.
  const Rational width(1, std::int64_t{1} << pair);
  const Rational start = Rational(1) - width * Rational(2);
  const ArcInterval crossed = sign > 0
      ? ArcInterval{Angle(start + width / Rational(4)), Angle(start + width / Rational(2))}
      : ArcInterval{Angle(start + width / Rational(2)), Angle(start + width * Rational(3, 4))};
  for (const auto& v : singular_values(sf)) {
    if (!(v < crossed.lo) && !(crossed.hi < v)) {
      throw Error(ErrorCode::PatternMismatch, "existing singularity inside the new minimum's sector");
    }
  }

  Piecewise pw = Piecewise::of(sf);
  for (auto& p : pw.pieces) p.push_back(row);
  pw.add_cut(crossed.lo);
  pw.add_cut(crossed.hi);
  pw.transform([&](const Angle& rep, std::vector<int>& t) {
    if (crossed.contains(rep)) std::swap(t[row - 2], t[row - 1]);
  });

  SliceFibration out = with_rows(sf, row);
  out.twist.assign(row + 1, 0);
  for (int r = 0; r < row - 1; ++r) out.twist[r] = sf.twist[r];
  out.pair_sign.push_back(sign);
  std::map<Angle, Decoration> fresh;
  fresh[crossed.lo] = {out.next_id++, axis_for_outward(Side::Below)};
  fresh[crossed.hi] = {out.next_id++, axis_for_outward(Side::Above)};
  install(out, pw, sf, fresh);

  MoveRecord rec;
  rec.kind = MoveKind::MinMovie;
  rec.index = row;
  rec.sign = sign;
  rec.effects = FiberEffect::on_interval(crossed, EffectKind::BoundaryMinMark, EffectKind::ArcBirth);
  return {out, rec};
}

MoveResult max_movie(const SliceFibration& sf, int row) {
  if (sf.rows < 2 || row != sf.rows) {
    throw Error(ErrorCode::PatternMismatch, "a maximum can only close the lowest row");
  }
  for (const auto& x : sf.xsings) {
    for (const auto& g : x.germs) {
      if (g.row == row && left_germ_rows(x) != std::pair{row - 1, row}) {
        throw Error(ErrorCode::PatternMismatch, "row is entangled with another pair");
      }
    }
  }
  const PairLayout layout = pair_layout(sf, row - 1, row);
  if (outward_side(*layout.entry) != Side::Above || outward_side(*layout.exit) != Side::Below) {
    throw Error(ErrorCode::LeafNotInward, "the strand leaf lies toward outward regions of the pair");
  }

  Piecewise pw = Piecewise::of(sf);
  pw.transform([&](const Angle&, std::vector<int>& t) {
    if (t[row - 1] != row) {
      const int y = t[row - 1];
      for (auto& v : t) {
        if (v == row) v = y;
      }
    }
    t.pop_back();
  });
  pw.coalesce();
  for (const auto& c : pw.cuts) {
    if (c == layout.entry->theta || c == layout.exit->theta) {
      throw Error(ErrorCode::PatternMismatch, "pair singularities survive the maximum");
    }
  }

  SliceFibration out = with_rows(sf, row - 1);
  out.twist.assign(row, 0);
  for (int r = 0; r < row - 1; ++r) out.twist[r] = sf.twist[r];
  out.pair_sign.pop_back();
  install(out, pw, sf, {});

  MoveRecord rec;
  rec.kind = MoveKind::MaxMovie;
  rec.index = row;
  rec.effects = FiberEffect::on_interval(layout.crossed, EffectKind::BoundaryMaxMark, EffectKind::ArcDeath);
  return {out, rec};
}

MoveResult cap_off(const SliceFibration& sf) {
  if (sf.rows != 1 || !sf.xsings.empty()) {
    throw Error(ErrorCode::PatternMismatch, "cap-off needs a nonsingular annulus");
  }
  SliceFibration out = empty_slice();
  out.next_id = sf.next_id;
  MoveRecord rec;
  rec.kind = MoveKind::CapOff;
  rec.effects = FiberEffect::uniform(EffectKind::ArcDeath);
  return {out, rec};
}

MoveResult band_movie(const SliceFibration& sf, const EtaSpec& eta) {
  const XSingularity* x = sf.find_xsing(eta.singularity);
  if (x == nullptr) {
    throw Error(ErrorCode::PatternMismatch, "no singularity with id " + std::to_string(eta.singularity));
  }
  if (eta.first_half != -eta.second_half || eta.crossings_first != eta.crossings_second) {
    throw Error(ErrorCode::UnbalancedWinding, "band arc winds unequally on its two halves");
  }
  const Rational l = eta.winding();
  if (!(x->theta - l == eta.endpoint)) {
    throw Error(ErrorCode::EndpointAngleMismatch, "singular value minus winding misses the endpoint leaf");
  }
  if (!(l < Rational(1)) || !(-l < Rational(1))) {
    throw Error(ErrorCode::PatternMismatch, "band winding must be less than a full turn");
  }

  MoveRecord rec;
  rec.kind = MoveKind::BandMovie;
  rec.eta = eta;
  if (l == Rational(0)) {
    rec.effects = FiberEffect::uniform(EffectKind::None);
    return {sf, rec};
  }
  const Side direction = l < Rational(0) ? Side::Above : Side::Below;
  if (outward_side(*x) != direction) {
    throw Error(ErrorCode::WrongRegions, "band arc passes through the inward regions");
  }
  if (is_singular(sf, eta.endpoint)) {
    throw Error(ErrorCode::PatternMismatch, "band endpoint leaf is singular");
  }
  const ArcInterval swept = direction == Side::Above ? ArcInterval{x->theta, eta.endpoint}
                                                     : ArcInterval{eta.endpoint, x->theta};
  const auto [a, c] = left_germ_rows(*x);

  Piecewise pw = Piecewise::of(sf);
  pw.add_cut(eta.endpoint);
  pw.transform([&](const Angle& rep, std::vector<int>& t) {
    if (swept.contains(rep)) std::swap(t[a - 1], t[c - 1]);
  });
  pw.coalesce();
  if (std::find(pw.cuts.begin(), pw.cuts.end(), x->theta) != pw.cuts.end()) {
    throw Error(ErrorCode::PatternMismatch, "band movie leaves a singularity behind");
  }

  SliceFibration out = sf;
  std::map<Angle, Decoration> fresh;
  fresh[eta.endpoint] = {x->id, x->outward_axis};
  install(out, pw, sf, fresh);
  rec.effects = FiberEffect::on_interval(swept, EffectKind::Saddle, EffectKind::None);
  return {out, rec};
}

EtaSpec crossing_eta(const SliceFibration& sf, int j, int sign, bool first_occurrence) {
  if (j < 1 || j >= sf.rows) throw Error(ErrorCode::NoSuchRow, "no generator " + std::to_string(j));
  if (sign != 1 && sign != -1) throw Error(ErrorCode::PatternMismatch, "crossing sign must be +1 or -1");
  if (sf.pair_sign.at(j - 1) != sign) {
    throw Error(ErrorCode::SignMismatch, "letter sign conflicts with the homogeneity signature");
  }
  const PairLayout layout = pair_layout(sf, j, j + 1);
  const Side entry_out = outward_side(*layout.entry);
  const Side exit_out = outward_side(*layout.exit);
  const bool faces_out = entry_out == Side::Below && exit_out == Side::Above;
  const bool faces_in = entry_out == Side::Above && exit_out == Side::Below;
  if (first_occurrence && !faces_out) {
    throw Error(ErrorCode::PatternMismatch, "first occurrence expects the pair to face its strand leaf");
  }
  if (!first_occurrence && !faces_in) {
    throw Error(ErrorCode::PatternMismatch, "repeat crossing expects the pair to face away from its strand leaf");
  }

  const auto values = sorted_values(sf);
  const Angle before_entry = Angle::forward_midpoint(predecessor(values, layout.entry->theta), layout.entry->theta);
  const Angle after_exit = Angle::forward_midpoint(layout.exit->theta, successor(values, layout.exit->theta));
  const XSingularity* mover = sign > 0 ? layout.exit : layout.entry;
  Angle target;
  if (first_occurrence) {
    target = sign > 0 ? before_entry : after_exit;
  } else {
    target = sign > 0 ? after_exit : before_entry;
  }

  const Side direction = outward_side(*mover);
  const Rational length = direction == Side::Above ? Angle::forward_distance(mover->theta, target)
                                                   : Angle::forward_distance(target, mover->theta);
  EtaSpec eta;
  eta.singularity = mover->id;
  eta.endpoint = target;
  eta.first_half = direction == Side::Above ? -length : length;
  eta.second_half = -eta.first_half;
  return eta;
}

MoveResult crossing_move(const SliceFibration& sf, int j, int sign, bool first_occurrence) {
  const EtaSpec eta = crossing_eta(sf, j, sign, first_occurrence);
  auto [mid, band] = band_movie(sf, eta);

  // C_j and C_{j+1} exchange positions, then their labels.
  Piecewise pw = Piecewise::of(mid);
  pw.transform([&](const Angle&, std::vector<int>& t) { std::swap(t[j - 1], t[j]); });
  SliceFibration out = mid;
  install(out, pw, mid, {});

  MoveRecord rec;
  rec.kind = MoveKind::CrossingMove;
  rec.index = j;
  rec.sign = sign;
  rec.first_occurrence = first_occurrence;
  rec.eta = eta;
  rec.effects = band.effects;
  return {out, rec};
}

MoveResult replay(const SliceFibration& before, const MoveRecord& record) {
  switch (record.kind) {
    case MoveKind::MeridionalStart: return meridional_start(before);
    case MoveKind::RotationIsotopy: return rotation_record(before, record.index, record.sign);
    case MoveKind::MinMovie: return min_movie(before, record.index);
    case MoveKind::MaxMovie: return max_movie(before, record.index);
    case MoveKind::BandMovie:
      if (!record.eta) throw Error(ErrorCode::PatternMismatch, "band record without an arc");
      return band_movie(before, *record.eta);
    case MoveKind::CrossingMove:
      return crossing_move(before, record.index, record.sign, record.first_occurrence);
    case MoveKind::CapOff: return cap_off(before);
  }
  throw Error(ErrorCode::PatternMismatch, "unknown move");
}

std::vector<LocalModelId> classify_event(const MoveRecord& m) {
  std::vector<LocalModelId> models;
  std::vector<EffectKind> allowed;
  switch (m.kind) {
    case MoveKind::MeridionalStart:
      models = {LocalModelId::Model2, LocalModelId::Model8};
      allowed = {EffectKind::ArcBirth};
      break;
    case MoveKind::MinMovie:
      models = {LocalModelId::Model4, LocalModelId::Model8};
      allowed = {EffectKind::ArcBirth, EffectKind::BoundaryMinMark};
      break;
    case MoveKind::MaxMovie:
      models = {LocalModelId::Model7, LocalModelId::Model3};
      allowed = {EffectKind::ArcDeath, EffectKind::BoundaryMaxMark};
      break;
    case MoveKind::CapOff:
      models = {LocalModelId::Model7, LocalModelId::Model1};
      allowed = {EffectKind::ArcDeath};
      break;
    case MoveKind::BandMovie:
    case MoveKind::CrossingMove:
      if (m.eta && !(m.eta->winding() == Rational(0))) models = {LocalModelId::ArrowX};
      allowed = {EffectKind::Saddle, EffectKind::None};
      break;
    case MoveKind::RotationIsotopy:
      allowed = {EffectKind::None};
      break;
  }
  const bool effects_ok = m.effects.is_partition() &&
      std::all_of(m.effects.kinds.begin(), m.effects.kinds.end(), [&](EffectKind k) {
        return std::find(allowed.begin(), allowed.end(), k) != allowed.end();
      });
  if (!effects_ok) models.push_back(LocalModelId::Unmatched);
  return models;
}

}  // namespace fibermovie
