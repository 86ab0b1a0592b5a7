#include <doctest.h>

#include "fibermovie/error.hpp"
#include "fibermovie/moves.hpp"

using namespace fibermovie;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

SliceFibration two_rows(int sign = 1) {
  return min_movie(rotate_pair(initial_annulus_fibration(), 2, sign), 2).first;
}

const XSingularity& at_theta(const SliceFibration& sf, const Angle& theta) {
  for (const auto& x : sf.xsings) {
    if (x.theta == theta) return x;
  }
  FAIL("no singularity at " << theta);
  return sf.xsings.front();
}

}  // namespace

TEST_CASE("fiber effects partition the circle") {
  const auto e = FiberEffect::on_interval({Angle(3, 4), Angle(1, 4)}, EffectKind::Saddle, EffectKind::None);
  CHECK(e.is_partition());
  CHECK(e.at(Angle()) == EffectKind::Saddle);
  CHECK(e.at(Angle(1, 2)) == EffectKind::None);
  CHECK_THROWS_AS(e.at(Angle(1, 4)), Error);
  CHECK(FiberEffect::uniform(EffectKind::ArcBirth).at(Angle(1, 7)) == EffectKind::ArcBirth);
  CHECK_THROWS_AS(FiberEffect::on_interval({Angle(), Angle()}, EffectKind::Saddle, EffectKind::None), Error);
  CHECK_FALSE((FiberEffect{{Angle(1, 2), Angle(1, 4)}, {EffectKind::None, EffectKind::Saddle}}).is_partition());
}

TEST_CASE("kind names round trip") {
  for (auto k : {MoveKind::MeridionalStart, MoveKind::RotationIsotopy, MoveKind::MinMovie, MoveKind::MaxMovie,
                 MoveKind::BandMovie, MoveKind::CrossingMove, MoveKind::CapOff}) {
    CHECK(move_kind_from_string(to_string(k)) == k);
  }
  for (auto k : {EffectKind::None, EffectKind::Saddle, EffectKind::ArcBirth, EffectKind::ArcDeath,
                 EffectKind::BoundaryMinMark, EffectKind::BoundaryMaxMark}) {
    CHECK(effect_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(move_kind_from_string("Teleport"), Error);
}

TEST_CASE("meridional start and cap-off bracket the movie") {
  const auto [annulus, rec] = meridional_start(empty_slice());
  CHECK(annulus == initial_annulus_fibration());
  CHECK(rec.effects == FiberEffect::uniform(EffectKind::ArcBirth));
  CHECK(code_of([&] { meridional_start(annulus); }) == ErrorCode::PatternMismatch);
  CHECK(cap_off(annulus).first.rows == 0);
  CHECK(code_of([] { cap_off(two_rows()); }) == ErrorCode::PatternMismatch);
}

TEST_CASE("rotation isotopy bookkeeping") {
  const SliceFibration a = initial_annulus_fibration();
  CHECK(rotate_pair(a, 2, -1).twist == std::vector<int>{0, -1});
  CHECK(code_of([&] { rotate_pair(a, 3, 1); }) == ErrorCode::NoSuchRow);
  CHECK(code_of([&] { rotate_pair(a, 0, 1); }) == ErrorCode::NoSuchRow);
  CHECK(code_of([] { rotate_pair(empty_slice(), 1, 1); }) == ErrorCode::NoSuchRow);
  CHECK(rotation_record(a, 1, 1).second.effects == FiberEffect::uniform(EffectKind::None));
}

TEST_CASE("min movie opens a pair in its sector") {
  const auto [pos, rec] = min_movie(rotate_pair(initial_annulus_fibration(), 2, 1), 2);
  CHECK(validate_slice(pos).valid());
  CHECK(pos.pair_sign == std::vector<int>{1});
  CHECK(pos.circles.size() == 4);
  CHECK(rec.effects.at(Angle(3, 16)) == EffectKind::BoundaryMinMark);
  CHECK(rec.effects.at(Angle(1, 2)) == EffectKind::ArcBirth);
  CHECK(outward_side(at_theta(pos, Angle(1, 8))) == Side::Below);
  CHECK(outward_side(at_theta(pos, Angle(1, 4))) == Side::Above);

  const SliceFibration neg = two_rows(-1);
  CHECK(neg.pair_sign == std::vector<int>{-1});
  CHECK(singular_values(neg) == std::vector<Angle>{Angle(1, 4), Angle(3, 8)});

  SliceFibration wound = rotate_pair(rotate_pair(initial_annulus_fibration(), 2, 1), 2, 1);
  CHECK(code_of([&] { min_movie(wound, 2); }) == ErrorCode::PatternMismatch);
  CHECK(code_of([] { min_movie(initial_annulus_fibration(), 3); }) == ErrorCode::PatternMismatch);
}

TEST_CASE("max movie refuses outward-facing pairs") {
  CHECK(code_of([] { max_movie(two_rows(), 2); }) == ErrorCode::LeafNotInward);
  CHECK(code_of([] { max_movie(two_rows(), 1); }) == ErrorCode::PatternMismatch);
  CHECK(code_of([] { max_movie(initial_annulus_fibration(), 1); }) == ErrorCode::PatternMismatch);
}

TEST_CASE("band movie transports a singularity through outward regions") {
  const SliceFibration sf = two_rows();
  const XSingularity& exit = at_theta(sf, Angle(1, 4));
  const EtaSpec eta{exit.id, Angle(1, 2), Rational(-1, 4), Rational(1, 4), 0, 0};
  const auto [moved, rec] = band_movie(sf, eta);
  CHECK(validate_slice(moved).valid());
  CHECK(singular_values(moved) == std::vector<Angle>{Angle(1, 8), Angle(1, 2)});
  CHECK(moved.find_xsing(exit.id)->theta == Angle(1, 2));
  CHECK(moved.find_xsing(exit.id)->outward_axis == exit.outward_axis);
  CHECK(rec.effects.at(Angle(3, 8)) == EffectKind::Saddle);
  CHECK(rec.effects.at(Angle(3, 4)) == EffectKind::None);

  SUBCASE("zero winding is the identity") {
    const auto [same, r0] = band_movie(sf, EtaSpec{exit.id, Angle(1, 4), Rational(0), Rational(0), 0, 0});
    CHECK(same == sf);
    CHECK(r0.effects == FiberEffect::uniform(EffectKind::None));
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { band_movie(sf, EtaSpec{exit.id, Angle(1, 2), Rational(-1, 4), Rational(1, 8), 0, 0}); }) ==
          ErrorCode::UnbalancedWinding);
    CHECK(code_of([&] { band_movie(sf, EtaSpec{exit.id, Angle(1, 2), Rational(-1, 4), Rational(1, 4), 1, 0}); }) ==
          ErrorCode::UnbalancedWinding);
    CHECK(code_of([&] { band_movie(sf, EtaSpec{exit.id, Angle(3, 5), Rational(-1, 4), Rational(1, 4), 0, 0}); }) ==
          ErrorCode::EndpointAngleMismatch);
    CHECK(code_of([&] { band_movie(sf, EtaSpec{exit.id, Angle(3, 16), Rational(1, 16), Rational(-1, 16), 0, 0}); }) ==
          ErrorCode::WrongRegions);
    CHECK(code_of([&] { band_movie(sf, EtaSpec{99, Angle(1, 2), Rational(-1, 4), Rational(1, 4), 0, 0}); }) ==
          ErrorCode::PatternMismatch);
  }
}

TEST_CASE("crossing moves check sign and occurrence") {
  const SliceFibration sf = two_rows();
  CHECK(code_of([&] { crossing_move(sf, 1, -1, true); }) == ErrorCode::SignMismatch);
  CHECK(code_of([&] { crossing_move(sf, 1, 1, false); }) == ErrorCode::PatternMismatch);
  CHECK(code_of([&] { crossing_move(sf, 2, 1, true); }) == ErrorCode::NoSuchRow);

  const auto [first, rec] = crossing_move(sf, 1, 1, true);
  CHECK(validate_slice(first).valid());
  CHECK(first.xsings.size() == 2);
  CHECK(rec.first_occurrence);
  REQUIRE(rec.eta);
  CHECK(rec.eta->winding() < Rational(0));
  CHECK(code_of([&] { crossing_move(first, 1, 1, true); }) == ErrorCode::PatternMismatch);

  const auto [second, rec2] = crossing_move(first, 1, 1, false);
  CHECK(validate_slice(second).valid());
  CHECK(rec2.eta->winding() > Rational(0));
  // After the pair has crossed, the maximum closes it.
  const auto [closed, rec3] = max_movie(second, 2);
  CHECK(closed.rows == 1);
  CHECK(validate_slice(closed).valid());
  CHECK(rec3.effects.is_partition());
}

TEST_CASE("replay reproduces each move and classification matches models") {
  const SliceFibration sf = two_rows();
  const auto [after, rec] = crossing_move(sf, 1, 1, true);
  const auto [again, rec_again] = replay(sf, rec);
  CHECK(again == after);
  CHECK(rec_again == rec);
  CHECK(classify_event(rec) == std::vector<LocalModelId>{LocalModelId::ArrowX});

  const auto min_rec = min_movie(rotate_pair(initial_annulus_fibration(), 2, 1), 2).second;
  CHECK(classify_event(min_rec) == std::vector<LocalModelId>{LocalModelId::Model4, LocalModelId::Model8});
  MoveRecord bogus = min_rec;
  bogus.effects = FiberEffect::uniform(EffectKind::Saddle);
  CHECK(classify_event(bogus).back() == LocalModelId::Unmatched);
  CHECK(to_string(LocalModelId::Model7) == "Model(vii)");
}

TEST_CASE("left germ rows and pair lookup") {
  const SliceFibration sf = two_rows();
  CHECK(pair_singularities(sf, 1).size() == 2);
  CHECK(pair_singularities(sf, 2).empty());
  CHECK(left_germ_rows(sf.xsings[0]) == std::pair{1, 2});
}
