#include <doctest.h>

#include "fibermovie/fiber.hpp"
#include "fibermovie/serialize.hpp"
#include "random_words.hpp"

using namespace fibermovie;

TEST_CASE("random homogeneous words: movies, fibers and files") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord w = testing::random_homogeneous_word(rng, 5, 12, true);
    CAPTURE(format_braid_word(w));
    CAPTURE(w.strands);
    REQUIRE(is_homogeneous(w));
    const Movie m = build_movie(w);

    for (std::size_t k = 0; k < m.records.size(); ++k) {
      CHECK(validate_slice(m.slices[k]).valid());
      const auto [after, rec] = replay(m.slices[k], m.records[k]);
      CHECK(after == m.slices[k + 1]);
    }
    CHECK(validate_movie(m).pass());

    const auto inv = classical_invariants(w);
    const FiberReport r = fiber_report(m, 6);
    for (const auto& s : r.samples) {
      CHECK(s.chi == w.strands - w.length());
      CHECK(s.boundary == inv.components);
      CHECK(s.profile.boundary_min == w.strands);
      CHECK(s.profile.boundary_max == w.strands);
      CHECK(s.components == 1);
    }
    CHECK(r.consistent);
    CHECK(parse_movie(serialize_movie(m)) == m);
  }
}

TEST_CASE("random words: every generator keeps its sign") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = testing::random_homogeneous_word(rng, 6, 20, true);
    CHECK(is_homogeneous(w));
    CHECK(w.length() <= 20);
    CHECK(w.length() >= w.strands - 1);
  }
}
