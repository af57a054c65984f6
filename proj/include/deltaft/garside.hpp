#pragma once

#include <vector>

#include "deltaft/braid.hpp"

namespace deltaft {

/// Left normal form Delta^infimum * A_1 ... A_r of a braid, where each A_i is
/// a proper simple braid stored as its permutation (0-based, images[p] is the
/// final position of the strand starting at p) and every adjacent pair is
/// left-weighted. Two words are equal in B_k exactly when their forms match.
struct GarsideForm {
  int strands = 1;
  int infimum = 0;
  std::vector<std::vector<int>> factors;

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

GarsideForm garside_normal_form(const BraidWord& w);

/// Positive word spelling a simple braid, for round-trip checks.
BraidWord simple_to_word(const std::vector<int>& perm);
/// Delta^infimum followed by the factors as a single word.
BraidWord garside_to_word(const GarsideForm& form);

}  // namespace deltaft
