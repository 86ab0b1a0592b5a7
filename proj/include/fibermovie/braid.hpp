#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibermovie {

/// One crossing: generator index (1-based) and sign.
struct Letter {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A braid word on `strands` strands; letters read left to right describe crossings bottom to top.
struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// s_1..s_{b-1}; signs[j-1] is the sign every occurrence of generator j carries.
struct HomogeneitySignature {
  std::vector<int> signs;
  int sign(int j) const { return signs.at(j - 1); }
  friend bool operator==(const HomogeneitySignature&, const HomogeneitySignature&) = default;
};

/// images[i] is the image of strand i+1 (1-based values).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int cycle_count() const;
  static Permutation identity(int n);
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct ClassicalInvariants {
  int chi = 0;
  int components = 1;
  std::optional<int> genus;
};

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt);

/// Canonical text: signed decimal integers separated by single spaces.
std::string format_braid_word(const BraidWord& w);

HomogeneitySignature homogeneity_signature(const BraidWord& w);
bool is_homogeneous(const BraidWord& w);

Permutation underlying_permutation(const BraidWord& w);

/// Seifert-algorithm invariants of the closure: b disks, c bands.
ClassicalInvariants classical_invariants(const BraidWord& w);

/// For each letter, whether it is the first occurrence of its generator (scanning left to right).
std::vector<bool> first_occurrences(const BraidWord& w);

}  // namespace fibermovie
