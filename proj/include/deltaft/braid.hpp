#pragma once

#include <span>
#include <string>
#include <vector>

#include "deltaft/free_group.hpp"

namespace deltaft {

/// A word in the Artin generators of B_k. Letter +i is sigma_i (strand at
/// position i passes over the strand at i + 1), -i its inverse; indices are
/// 1-based and lie in [1, k - 1]. Words are read left to right: "a b" means
/// a first, then b.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  /// Stores the letters as given. Use `reduced()` for the free normal form.
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands); }
  static BraidWord generator(int strands, int letter);

  /// Parses "Bk i1 i2 ...". Throws ParseError.
  static BraidWord parse(const std::string& text);
  std::string to_string() const;

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord reduced() const;
  /// Sum of letter signs; the writhe of the closure.
  long exponent_sum() const;

  /// Copy of the letters [first, last) as a word in the same group.
  BraidWord slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Concatenation followed by free reduction. Throws DomainError on a strand
/// mismatch.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord compose(std::initializer_list<BraidWord> parts);
/// Concatenation without any reduction.
BraidWord concat_raw(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
/// a b a^-1 b^-1, freely reduced.
BraidWord commutator(const BraidWord& a, const BraidWord& b);
/// The word a^e for any integer e.
BraidWord power(const BraidWord& a, int e);

/// images[p] is the final position of the strand that starts at position p
/// (both 1-based, stored 0-based).
class Permutation {
 public:
  explicit Permutation(int size);
  explicit Permutation(std::vector<int> images);  // 1-based values

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based image of the 1-based point p.
  int operator()(int p) const { return images_[static_cast<std::size_t>(p - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  /// Disjoint cycles, each starting with its smallest point, fixed points
  /// included as 1-cycles; sorted by first point.
  std::vector<std::vector<int>> cycles() const;
  /// "(1 2 3)" style with fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  /// First this, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation permutation(const BraidWord& a);
bool is_pure(const BraidWord& a);

/// For each starting strand, the positions it occupies are tracked; returns
/// the two starting-strand labels (1-based) meeting at each letter.
std::vector<std::pair<int, int>> crossing_strands(const BraidWord& a);

struct PureGenSpec {
  int i = 1;
  int j = 2;
};

/// p_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1).
BraidWord pure_gen(PureGenSpec spec, int strands);
BraidWord pure_gen(int i, int j, int strands);

/// t_k = s_{k-1}^-1 s_{k-2}^-1 ... s_1^-1.
BraidWord shift_braid(int strands);

/// t_k^-m p t_k^m for a pure p; negative m shifts the other way.
BraidWord conjugate_shift(const BraidWord& p, int m);

/// The same word on more strands (extra strands on the right).
BraidWord embed(const BraidWord& a, int strands);

/// r in B_{2k} with closure(r t_{2k}) = closure(p t_k) # closure(q t_k): p on
/// strands 1..k followed by q shifted onto strands k+1..2k.
BraidWord braid_connected_sum(const BraidWord& p, const BraidWord& q);

/// Decides equality in B_k via the Garside left normal form.
bool braid_eq(const BraidWord& a, const BraidWord& b);

}  // namespace deltaft
