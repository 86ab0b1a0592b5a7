#include <doctest.h>

#include "fibermovie/braid.hpp"
#include "fibermovie/error.hpp"

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

}  // namespace

TEST_CASE("parse infers strands from the largest generator") {
  const BraidWord w = parse_braid_word("-1 -1 -2 3 -1 3 -2");
  CHECK(w.strands == 4);
  CHECK(w.length() == 7);
  CHECK(w.letters[0] == Letter{1, -1});
  CHECK(w.letters[3] == Letter{3, 1});
  CHECK(format_braid_word(w) == "-1 -1 -2 3 -1 3 -2");
  CHECK(parse_braid_word("+2   1").letters[0] == Letter{2, 1});
}

TEST_CASE("empty word is the one-strand unknot") {
  const BraidWord w = parse_braid_word("");
  CHECK(w.strands == 1);
  CHECK(w.length() == 0);
  CHECK(is_homogeneous(w));
  const auto inv = classical_invariants(w);
  CHECK(inv.chi == 1);
  CHECK(inv.components == 1);
  CHECK(inv.genus == 0);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_braid_word("1 x"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_braid_word("0"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_braid_word("1.5"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_braid_word("3", 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_braid_word("1", 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("homogeneity signature and its diagnostics") {
  CHECK(homogeneity_signature(parse_braid_word("-1 -1 -2 3 -1 3 -2")).signs == std::vector<int>{-1, -1, 1});
  CHECK(homogeneity_signature(parse_braid_word("1 1 1")).signs == std::vector<int>{1});
  CHECK(code_of([] { homogeneity_signature(parse_braid_word("1 -1")); }) == ErrorCode::MixedSign);
  CHECK(code_of([] { homogeneity_signature(parse_braid_word("1", 3)); }) == ErrorCode::MissingGenerator);
  CHECK(code_of([] { classical_invariants(parse_braid_word("2")); }) == ErrorCode::NotHomogeneous);
  CHECK_FALSE(is_homogeneous(parse_braid_word("1 2 -1")));
}

TEST_CASE("Seifert and permutation oracles on the fixtures") {
  struct Fixture {
    const char* word;
    int chi, components, genus;
  };
  for (const Fixture f : {Fixture{"1 1", 0, 2, 0}, Fixture{"1 1 1", -1, 1, 1}, Fixture{"-1 -1 -2 3 -1 3 -2", -3, 3, 1},
                          Fixture{"1 -2 1 -2", -1, 1, 1}}) {
    CAPTURE(f.word);
    const auto inv = classical_invariants(parse_braid_word(f.word));
    CHECK(inv.chi == f.chi);
    CHECK(inv.components == f.components);
    CHECK(inv.genus == f.genus);
  }
}

TEST_CASE("underlying permutation composes transpositions") {
  CHECK(underlying_permutation(parse_braid_word("1 1")) == Permutation::identity(2));
  CHECK(underlying_permutation(parse_braid_word("1 1 1")).images == std::vector<int>{2, 1});
  CHECK(underlying_permutation(parse_braid_word("1 2")).cycle_count() == 1);
  CHECK(Permutation::identity(5).cycle_count() == 5);
}

TEST_CASE("first occurrences scan left to right") {
  CHECK(first_occurrences(parse_braid_word("1 1 1")) == std::vector<bool>{true, false, false});
  CHECK(first_occurrences(parse_braid_word("-1 -1 -2 3 -1 3 -2")) ==
        std::vector<bool>{true, false, true, true, false, false, false});
}
