#pragma once

#include <random>

#include "fibermovie/braid.hpp"

namespace fibermovie::testing {

/// Homogeneous word on `strands` strands with `length` letters; every generator appears.
inline BraidWord random_homogeneous_word(std::mt19937& rng, int strands, int length) {
  BraidWord w;
  w.strands = strands;
  const int gens = strands - 1;
  if (gens == 0) return w;
  std::vector<int> signs(gens);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  std::vector<int> indices;
  for (int j = 1; j <= gens; ++j) indices.push_back(j);
  std::uniform_int_distribution<int> pick(1, gens);
  while (static_cast<int>(indices.size()) < length) indices.push_back(pick(rng));
  std::shuffle(indices.begin(), indices.end(), rng);
  for (int j : indices) w.letters.push_back({j, signs[j - 1]});
  return w;
}

/// b in [1, max_strands], c in [b - 1, max_length].
inline BraidWord random_homogeneous_word(std::mt19937& rng, int max_strands, int max_length, bool) {
  std::uniform_int_distribution<int> b_dist(1, max_strands);
  const int b = b_dist(rng);
  const int lo = b - 1;
  std::uniform_int_distribution<int> c_dist(lo, std::max(lo, max_length));
  return random_homogeneous_word(rng, b, c_dist(rng));
}

}  // namespace fibermovie::testing
