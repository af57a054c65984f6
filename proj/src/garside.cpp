#include "deltaft/garside.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "deltaft/error.hpp"

namespace deltaft {

namespace {

// Simple braids are permutations of 0..k-1 (images[p] = final position of
// the strand starting at p), kept in one flat buffer of k bytes each.
using Simple = std::vector<int>;

class SimpleStore {
 public:
  explicit SimpleStore(int k) : k_(static_cast<std::size_t>(k)) {}

  std::size_t size() const { return data_.size() / k_; }
  std::uint8_t* at(std::size_t n) { return data_.data() + n * k_; }

  std::uint8_t* push() {
    data_.resize(data_.size() + k_);
    return at(size() - 1);
  }

  Simple get(std::size_t n) const {
    return Simple(data_.begin() + static_cast<std::ptrdiff_t>(n * k_),
                  data_.begin() + static_cast<std::ptrdiff_t>((n + 1) * k_));
  }

 private:
  std::size_t k_;
  std::vector<std::uint8_t> data_;
};

// Positive simple braid sigma_i (1-based i).
void set_sigma(std::uint8_t* s, int k, int i) {
  for (int p = 0; p < k; ++p) s[p] = static_cast<std::uint8_t>(p);
  std::swap(s[i - 1], s[i]);
}

// Delta sigma_i^-1, the simple braid X with sigma_i^-1 = Delta^-1 X.
void set_sigma_complement(std::uint8_t* s, int k, int i) {
  for (int p = 0; p < k; ++p) {
    int q = k - 1 - p;
    if (q == i - 1)
      q = i;
    else if (q == i)
      q = i - 1;
    s[p] = static_cast<std::uint8_t>(q);
  }
}

// Conjugation by Delta: sigma_i -> sigma_{k-i}.
void tau_in_place(std::uint8_t* s, int k) {
  std::uint8_t out[256];
  for (int p = 0; p < k; ++p) out[p] = static_cast<std::uint8_t>(k - 1 - s[k - 1 - p]);
  std::copy(out, out + k, s);
}

// Moves generators from the front of b to the back of a until the pair is
// left-weighted: i starts b when the strands starting at i-1, i cross, and
// finishes a when the strands ending at i-1, i cross. Returns whether
// anything moved.
bool left_weight(std::uint8_t* a, std::uint8_t* b, int k) {
  std::uint8_t a_inv[256];
  for (int p = 0; p < k; ++p) a_inv[a[p]] = static_cast<std::uint8_t>(p);
  bool changed = false;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i < k; ++i) {
      if (b[i - 1] > b[i] && a_inv[i - 1] < a_inv[i]) {
        // a <- a sigma_i, b <- sigma_i^-1 b
        std::swap(a[a_inv[i - 1]], a[a_inv[i]]);
        std::swap(a_inv[i - 1], a_inv[i]);
        std::swap(b[i - 1], b[i]);
        progress = changed = true;
      }
    }
  }
  return changed;
}

bool is_identity(const std::uint8_t* s, int k) {
  for (int p = 0; p < k; ++p)
    if (s[p] != p) return false;
  return true;
}

bool is_delta(const std::uint8_t* s, int k) {
  for (int p = 0; p < k; ++p)
    if (s[p] != k - 1 - p) return false;
  return true;
}

Simple simple_delta(int k) {
  Simple s(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) s[static_cast<std::size_t>(p)] = k - 1 - p;
  return s;
}

}  // namespace

GarsideForm garside_normal_form(const BraidWord& w) {
  const int k = w.strands();
  GarsideForm form;
  form.strands = k;
  if (k < 2) return form;
  if (k > 256) throw DomainError("garside_normal_form: at most 256 strands");

  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1). Pulling each Delta^-1 to the
  // front conjugates every earlier factor by Delta, so a factor is flipped
  // by tau once per later negative letter; tau is an involution.
  const BraidWord reduced = w.reduced();
  const auto& letters = reduced.letters();
  SimpleStore factors(k);
  for (int letter : letters) {
    if (letter > 0) {
      set_sigma(factors.push(), k, letter);
    } else {
      --form.infimum;
      set_sigma_complement(factors.push(), k, -letter);
    }
  }
  bool flip = false;
  for (std::size_t n = letters.size(); n-- > 0;) {
    if (flip) tau_in_place(factors.at(n), k);
    if (letters[n] < 0) flip = !flip;
  }

  // Restore left-weightedness leftwards after each appended factor.
  for (std::size_t n = 1; n < factors.size(); ++n)
    for (std::size_t j = n; j > 0; --j)
      if (!left_weight(factors.at(j - 1), factors.at(j), k)) break;

  std::size_t first = 0;
  while (first < factors.size() && is_delta(factors.at(first), k)) {
    ++form.infimum;
    ++first;
  }
  std::size_t last = factors.size();
  while (last > first && is_identity(factors.at(last - 1), k)) --last;
  for (std::size_t n = first; n < last; ++n) form.factors.push_back(factors.get(n));
  return form;
}

BraidWord simple_to_word(const std::vector<int>& perm) {
  // Bubble sort of the final positions; each adjacent swap is one crossing.
  const int k = static_cast<int>(perm.size());
  std::vector<int> order = perm;  // order[p] = target of the strand at p
  std::vector<int> letters;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int p = 0; p + 1 < k; ++p) {
      if (order[static_cast<std::size_t>(p)] > order[static_cast<std::size_t>(p + 1)]) {
        std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(p + 1)]);
        letters.push_back(p + 1);
        swapped = true;
      }
    }
  }
  return BraidWord(k, std::move(letters));
}

BraidWord garside_to_word(const GarsideForm& form) {
  const int k = form.strands;
  BraidWord delta = simple_to_word(simple_delta(k));
  BraidWord out = power(delta, form.infimum);
  for (const auto& f : form.factors) out = compose(out, simple_to_word(f));
  return out;
}

}  // namespace deltaft
