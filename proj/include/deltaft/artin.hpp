#pragma once

#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/free_group.hpp"

namespace deltaft {

/// Automorphism of the free group F_k given by the images of x_1 ... x_k.
struct ArtinAutomorphism {
  std::vector<FreeWord> images;

  static ArtinAutomorphism identity(int rank);
  int rank() const { return static_cast<int>(images.size()); }
  FreeWord apply(const FreeWord& w) const { return free_substitute(w, images); }

  friend bool operator==(const ArtinAutomorphism&, const ArtinAutomorphism&) = default;
};

/// f after g: x -> f(g(x)).
ArtinAutomorphism compose(const ArtinAutomorphism& f, const ArtinAutomorphism& g);

/// Artin action of a braid word: sigma_i sends x_i -> x_i x_{i+1} x_i^-1 and
/// x_{i+1} -> x_i. The action of "a b" is action(a) after action(b), so
/// artin_action is a homomorphism into Aut(F_k). Image words grow
/// exponentially with the word length in general, so this is meant for
/// short words.
ArtinAutomorphism artin_action(const BraidWord& a);

}  // namespace deltaft
