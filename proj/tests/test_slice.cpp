#include <doctest.h>

#include "fibermovie/error.hpp"
#include "fibermovie/moves.hpp"

using namespace fibermovie;

namespace {

/// Two rows with the strand pair crossed on (1/8, 1/4).
SliceFibration two_rows() {
  SliceFibration sf = initial_annulus_fibration();
  sf = rotate_pair(sf, 2, 1);
  return min_movie(sf, 2).first;
}

}  // namespace

TEST_CASE("the initial annulus is a valid nonsingular fibration") {
  const SliceFibration sf = initial_annulus_fibration();
  const auto report = validate_slice(sf);
  CHECK(report.valid());
  CHECK(sf.circles.size() == 2);
  CHECK(singular_values(sf).empty());
  const auto leaf = regular_leaf(sf, Angle(1, 3));
  REQUIRE(leaf.size() == 1);
  CHECK(leaf[0].from == CircleLabel::left(1));
  CHECK(leaf[0].to == CircleLabel::right(1));
}

TEST_CASE("empty slice validates as a cap") {
  CHECK(validate_slice(empty_slice()).valid());
  CHECK(regular_leaf(empty_slice(), Angle()).empty());
}

TEST_CASE("circle labels print and parse") {
  CHECK(CircleLabel::left(3).str() == "L3");
  CHECK(CircleLabel::parse("R12") == CircleLabel::right(12));
  CHECK_THROWS_AS(CircleLabel::parse("Q1"), Error);
  CHECK_THROWS_AS(CircleLabel::parse("L0"), Error);
}

TEST_CASE("two-row slice: singular values, chambers and leaves") {
  const SliceFibration sf = two_rows();
  CHECK(validate_slice(sf).valid());
  CHECK(sf.xsings.size() == 2);
  const auto values = singular_values(sf);
  CHECK(values == std::vector<Angle>{Angle(1, 8), Angle(1, 4)});
  CHECK(is_singular(sf, Angle(1, 4)));
  CHECK_FALSE(is_singular(sf, Angle(1, 3)));
  CHECK(chamber_at(sf, Angle(3, 16)).targets == std::vector<int>{2, 1});
  CHECK(chamber_at(sf, Angle(3, 4)).targets == std::vector<int>{1, 2});
  CHECK_THROWS_AS(regular_leaf(sf, Angle(1, 8)), Error);
}

TEST_CASE("quadrants follow the outward axis") {
  XSingularity x;
  x.germs = {CircleLabel::left(1), CircleLabel::right(1), CircleLabel::left(2), CircleLabel::right(2)};
  x.outward_axis = OutwardAxis::Germs02;
  auto q = quadrants(x);
  CHECK(q.outward[0] == Region{3, 0});
  CHECK(q.outward[1] == Region{1, 2});
  x.outward_axis = OutwardAxis::Germs13;
  q = quadrants(x);
  CHECK(q.outward[0] == Region{0, 1});
  CHECK(q.inward[1] == Region{1, 2});
  x.germs.pop_back();
  CHECK_THROWS_AS(quadrants(x), Error);
}

TEST_CASE("transition germs need exactly one exchanged pair") {
  const auto g = transition_germs({1, 2, 3}, {1, 3, 2});
  REQUIRE(g);
  CHECK((*g)[0] == CircleLabel::left(2));
  CHECK((*g)[1] == CircleLabel::right(2));
  CHECK((*g)[2] == CircleLabel::left(3));
  CHECK((*g)[3] == CircleLabel::right(3));
  CHECK_FALSE(transition_germs({1, 2, 3}, {2, 3, 1}));
  CHECK_FALSE(transition_germs({1, 2}, {1, 2}));
  CHECK_FALSE(transition_germs({1, 2}, {1, 2, 3}));
}

TEST_CASE("validator flags malformed slices") {
  SUBCASE("three-germ singularity") {
    SliceFibration sf = two_rows();
    sf.xsings[0].germs.pop_back();
    CHECK(validate_slice(sf).has("MalformedSingularity"));
  }
  SUBCASE("unexplained leaf change") {
    SliceFibration sf = two_rows();
    sf.xsings.erase(sf.xsings.begin());
    CHECK_FALSE(validate_slice(sf).valid());
  }
  SUBCASE("missing right circle") {
    SliceFibration sf = two_rows();
    sf.circles.pop_back();
    CHECK_FALSE(validate_slice(sf).valid());
  }
  SUBCASE("wrong boundary degree") {
    SliceFibration sf = two_rows();
    sf.circles[0].degree = -1;
    CHECK(validate_slice(sf).has("BoundaryDegree"));
  }
  SUBCASE("non-permutation leaf") {
    SliceFibration sf = two_rows();
    sf.chambers[0].targets = {1, 1};
    CHECK(validate_slice(sf).has("ImproperLeaf"));
  }
  SUBCASE("twist table of the wrong size") {
    SliceFibration sf = two_rows();
    sf.twist.pop_back();
    CHECK(validate_slice(sf).has("BadTwist"));
  }
  SUBCASE("circle leaves are a warning, not an error") {
    SliceFibration sf = initial_annulus_fibration();
    sf.chambers[0].closed_leaves = 1;
    const auto report = validate_slice(sf);
    CHECK(report.has("CircleLeaf"));
    CHECK(report.valid());
    CHECK(regular_leaf(sf, Angle(1, 2)).back().closed);
  }
}

TEST_CASE("leaf complex of a valid slice is planar") {
  const SliceFibration sf = two_rows();
  const CombinatorialMap map = leaf_complex_map(sf);
  CHECK(map.vertex_count - map.edge_count() + map.face_count() == 2 * map.component_count());
}
