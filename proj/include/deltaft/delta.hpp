#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/certificate.hpp"
#include "deltaft/laurent.hpp"

namespace deltaft {

/// Splices c [p_{h,i}, p_{i,j}]^sign c^-1 into a word just before the letter
/// at `position` (position == length appends). The relator block is one
/// braid-local delta move; the conjugator c only says where the disk sits.
struct DeltaInsertion {
  std::size_t position = 0;
  int h = 1;
  int i = 2;
  int j = 3;
  int sign = 1;
  /// Letters of c in the base's braid group; empty means no conjugation.
  std::vector<int> conjugator;

  /// The spliced block as a word in B_strands.
  BraidWord block(int strands) const;

  friend bool operator==(const DeltaInsertion&, const DeltaInsertion&) = default;
};

/// Throws DomainError unless the triple, sign and conjugator fit B_strands.
void validate_insertion(const DeltaInsertion& move, int strands, std::size_t base_length);

/// Applies several site-sets at once. Positions refer to the untouched base
/// word; insertions at a common position keep their list order. Two sets
/// inserting at the same position is an overlapping-splice conflict.
BraidWord apply_insertions(const BraidWord& base, const std::vector<std::vector<DeltaInsertion>>& site_sets);
BraidWord apply_insertions(const BraidWord& base, const std::vector<DeltaInsertion>& moves);

struct DeltaScript {
  BraidWord base;
  std::vector<DeltaInsertion> moves;
  BraidWord target;

  BraidWord result() const { return apply_insertions(base, moves); }
  bool holds() const { return braid_eq(result(), target); }
};

/// Writes w in P' as a product of conjugated delta relators applied to the
/// empty word: one move per commutator factor of each combed layer.
DeltaScript delta_trivialize(const BraidWord& w);

/// Base word with n site-sets; L_T is the closure of (base with the sets in
/// T applied) followed by `closer`.
struct MarkedBraid {
  BraidWord base;
  BraidWord closer;
  std::vector<std::vector<DeltaInsertion>> site_sets;

  int order() const { return static_cast<int>(site_sets.size()); }
  /// Word for the subset encoded by bit (s - 1) of mask for set s.
  BraidWord subset_word(std::uint64_t mask) const;
  /// subset_word followed by the closer.
  BraidWord link_word(std::uint64_t mask) const;
};

void validate(const MarkedBraid& marked);

/// Marked braid over the certified word with one site-set per certified
/// level; every nonempty subset turns the base into the identity. The base
/// is the unreduced word the certificate spells, and the closer is t_k.
MarkedBraid delta_n_witness(const GammaCertificate& cert);

/// Vector-valued invariant of a closed braid word.
struct Invariant {
  std::string name;
  std::function<std::vector<Rational>(const BraidWord&)> evaluate;
};

/// "series:d" (u_0 ... u_d), "a2", or "const" (the value 1).
Invariant parse_invariant(const std::string& spec);

struct AltSumEntry {
  std::uint64_t mask = 0;
  std::vector<Rational> values;
};

struct AltSumReport {
  int n = 0;
  std::string invariant;
  std::vector<AltSumEntry> entries;  // ascending mask
  std::vector<Rational> total;

  /// Sum of (-1)^|T| times each entry.
  std::vector<Rational> recompute_total() const;
  bool vanishes() const;
};

/// Evaluates v on all 2^n links L_T. An evaluation failure is rethrown as a
/// DomainError naming the subset.
AltSumReport alt_sum(const MarkedBraid& marked, const Invariant& v);

/// 1-based members of the subset encoded by mask, e.g. "{1,3}".
std::string subset_label(std::uint64_t mask);

}  // namespace deltaft
