#include "deltaft/artin.hpp"

#include <cstdlib>

namespace deltaft {

ArtinAutomorphism ArtinAutomorphism::identity(int rank) {
  ArtinAutomorphism f;
  for (int g = 1; g <= rank; ++g) f.images.push_back({g});
  return f;
}

ArtinAutomorphism compose(const ArtinAutomorphism& f, const ArtinAutomorphism& g) {
  ArtinAutomorphism out;
  out.images.reserve(g.images.size());
  for (const FreeWord& img : g.images) out.images.push_back(f.apply(img));
  return out;
}

ArtinAutomorphism artin_action(const BraidWord& a) {
  // Images of the prefix read so far; appending a letter substitutes the
  // prefix images into the letter's short images.
  ArtinAutomorphism f = ArtinAutomorphism::identity(a.strands());
  for (int letter : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
    FreeWord xi = f.images[i];
    FreeWord xj = f.images[i + 1];
    if (letter > 0) {
      f.images[i] = free_concat(free_concat(xi, xj), free_invert(xi));
      f.images[i + 1] = std::move(xi);
    } else {
      f.images[i] = xj;
      f.images[i + 1] = free_concat(free_concat(free_invert(xj), xi), xj);
    }
  }
  return f;
}

}  // namespace deltaft
