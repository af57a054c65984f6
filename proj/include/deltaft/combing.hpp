#pragma once

#include <map>
#include <utility>
#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/free_group.hpp"

namespace deltaft {

/// Abelianization of P_k: e_{i,j} is the exponent sum of p_{i,j}.
class ExponentVector {
 public:
  explicit ExponentVector(int strands = 1) : strands_(strands) {}

  int strands() const { return strands_; }
  long at(int i, int j) const;
  void add(int i, int j, long delta);
  bool is_zero() const { return entries_.empty(); }
  /// Nonzero entries keyed by (i, j) with i < j.
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }

  ExponentVector operator+(const ExponentVector& other) const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  int strands_;
  std::map<std::pair<int, int>, long> entries_;
};

/// Half the signed crossing count between each pair of strands. Throws
/// DomainError for non-pure input.
ExponentVector exponent_vector(const BraidWord& p);

bool is_in_p_prime(const BraidWord& p);

/// Artin normal form p = layer_k * layer_{k-1} * ... * layer_2, where layer j
/// is a free word in A_{1,j} ... A_{j-1,j} (letter +i stands for A_{i,j}).
struct CombedForm {
  int strands = 1;
  /// layers[0] is layer k, layers.back() is layer 2.
  std::vector<FreeWord> layers;

  int layer_index(std::size_t pos) const { return strands - static_cast<int>(pos); }
};

CombedForm comb(const BraidWord& p);

/// Re-expands the layers via pure_gen into one freely reduced word.
BraidWord expand(const CombedForm& form);

/// Expands a single layer word of layer j into B_k.
BraidWord expand_layer(const FreeWord& layer, int j, int strands);

/// One factor c [x_a, x_b]^sign c^-1 with a < b.
struct CommutatorFactor {
  FreeWord conjugator;
  int a = 1;
  int b = 2;
  int sign = 1;

  FreeWord word() const;
};

struct CommutatorDecomposition {
  std::vector<CommutatorFactor> factors;

  /// Product of all factors, freely reduced.
  FreeWord product() const;
};

/// Writes a free word with all exponent sums zero as a product of conjugated
/// generator commutators. Collection order: the lowest generator present,
/// its leftmost pair of consecutive opposite-sign occurrences, moving the
/// left letter rightwards one transposition at a time.
CommutatorDecomposition decompose_layer(const FreeWord& layer);

}  // namespace deltaft
