#pragma once

#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/random.hpp"

namespace deltaft::testing {

inline BraidWord random_word(Rng& rng, int k, int length) {
  std::vector<int> letters;
  if (k < 2) return BraidWord(k);
  for (int n = 0; n < length; ++n) letters.push_back(rng.sign() * rng.uniform(1, k - 1));
  return BraidWord(k, std::move(letters));
}

inline BraidWord random_pure_gen(Rng& rng, int k) {
  const int j = rng.uniform(2, k);
  const int i = rng.uniform(1, j - 1);
  BraidWord g = pure_gen(i, j, k);
  return rng.sign() > 0 ? g : invert(g);
}

/// Random pure braid: a random word followed by a correction returning all
/// strands home, so the result is not just a product of standard generators.
inline BraidWord random_pure(Rng& rng, int k, int length) {
  BraidWord w = random_word(rng, k, length);
  // Sort the strands back with positive crossings (bubble sort on the
  // permutation of w).
  std::vector<int> at(static_cast<std::size_t>(k));
  const Permutation perm = permutation(w);
  for (int s = 1; s <= k; ++s) at[static_cast<std::size_t>(perm(s) - 1)] = s;
  std::vector<int> fix;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int p = 0; p + 1 < k; ++p)
      if (at[static_cast<std::size_t>(p)] > at[static_cast<std::size_t>(p + 1)]) {
        std::swap(at[static_cast<std::size_t>(p)], at[static_cast<std::size_t>(p + 1)]);
        fix.push_back(rng.sign() * (p + 1));
        swapped = true;
      }
  }
  return compose(w, BraidWord(k, fix));
}

/// Random element of P_k' as a product of conjugated commutators of pure braids.
inline BraidWord random_p_prime(Rng& rng, int k, int factors, int conj_length = 2) {
  BraidWord out(k);
  for (int n = 0; n < factors; ++n) {
    BraidWord c = random_word(rng, k, rng.uniform(0, conj_length));
    BraidWord comm = commutator(random_pure_gen(rng, k), random_pure_gen(rng, k));
    out = compose({out, c, comm, invert(c)});
  }
  return out;
}

}  // namespace deltaft::testing
