#include "fibermovie/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "fibermovie/error.hpp"

namespace fibermovie {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = images[i] - 1) seen[i] = true;
  }
  return cycles;
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  int max_index = 0;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value == 0) {
      throw Error(ErrorCode::MalformedToken, "token '" + token + "' is not a nonzero integer");
    }
    w.letters.push_back({std::abs(value), value > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(value));
  }
  if (strands) {
    if (*strands < 1) throw Error(ErrorCode::IndexOutOfRange, "strand count must be at least 1");
    w.strands = *strands;
    for (const auto& l : w.letters) {
      if (l.index > w.strands - 1) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "generator " + std::to_string(l.index) + " needs more than " +
                        std::to_string(w.strands) + " strands");
      }
    }
  } else {
    w.strands = max_index + 1;
  }
  return w;
}

std::string format_braid_word(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

HomogeneitySignature homogeneity_signature(const BraidWord& w) {
  HomogeneitySignature sig;
  sig.signs.assign(std::max(0, w.strands - 1), 0);
  for (const auto& l : w.letters) {
    int& s = sig.signs.at(l.index - 1);
    if (s != 0 && s != l.sign) {
      throw Error(ErrorCode::MixedSign, "generator " + std::to_string(l.index) + " occurs with both signs");
    }
    s = l.sign;
  }
  for (std::size_t j = 0; j < sig.signs.size(); ++j) {
    if (sig.signs[j] == 0) {
      throw Error(ErrorCode::MissingGenerator, "generator " + std::to_string(j + 1) + " never occurs");
    }
  }
  return sig;
}

bool is_homogeneous(const BraidWord& w) {
  try {
    homogeneity_signature(w);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Permutation underlying_permutation(const BraidWord& w) {
  // position -> strand currently there; follow each strand from bottom to top.
  std::vector<int> at(w.strands);
  for (int i = 0; i < w.strands; ++i) at[i] = i + 1;
  for (const auto& l : w.letters) std::swap(at[l.index - 1], at[l.index]);
  Permutation p;
  p.images.resize(w.strands);
  // strand starting at position at[k] ends at position k
  for (int k = 0; k < w.strands; ++k) p.images[at[k] - 1] = k + 1;
  return p;
}

ClassicalInvariants classical_invariants(const BraidWord& w) {
  try {
    homogeneity_signature(w);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotHomogeneous, e.what());
  }
  ClassicalInvariants inv;
  inv.chi = w.strands - w.length();
  inv.components = underlying_permutation(w).cycle_count();
  inv.genus = (2 - inv.components - inv.chi) / 2;
  return inv;
}

std::vector<bool> first_occurrences(const BraidWord& w) {
  std::vector<bool> seen(std::max(1, w.strands), false);
  std::vector<bool> first;
  first.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    first.push_back(!seen[l.index - 1]);
    seen[l.index - 1] = true;
  }
  return first;
}

}  // namespace fibermovie
