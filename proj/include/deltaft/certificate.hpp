#pragma once

#include <cstdint>
#include <vector>

#include "deltaft/braid.hpp"

namespace deltaft {

/// One generating factor c [p_left, p_right] c^-1 of a sampled P' element.
struct CommutatorGenerator {
  BraidWord conjugator;
  PureGenSpec left;
  PureGenSpec right;

  BraidWord word(int strands) const;
};

/// Construction tree certifying membership in gamma_n(P_k'), where
/// gamma_1(P') = P' and gamma_{n+1}(P') = [gamma_n(P'), P'].
struct GammaNode {
  enum class Kind { Leaf, Commutator, Product, Conjugate };

  Kind kind = Kind::Leaf;
  /// Leaf: the P' element. Conjugate: the conjugating braid u (node u g u^-1).
  BraidWord word;
  /// Leaf only, optional: factors whose product is `word`.
  std::vector<CommutatorGenerator> generators;
  /// Commutator: {left at level n, right at level >= 1}.
  /// Product: one or more factors. Conjugate: {g}.
  std::vector<GammaNode> children;

  static GammaNode leaf(BraidWord w, std::vector<CommutatorGenerator> generators = {});
  static GammaNode commutator(GammaNode left, GammaNode right);
  static GammaNode product(std::vector<GammaNode> factors);
  static GammaNode conjugate(BraidWord by, GammaNode inner);
};

struct GammaCertificate {
  int strands = 1;
  int level = 1;
  GammaNode root;
};

/// Level certified by the tree shape (leaves are level 1).
int certified_level(const GammaNode& node);

/// The certified word, as the unreduced concatenation that the tree spells.
BraidWord evaluate_raw(const GammaNode& node, int strands);
BraidWord evaluate(const GammaCertificate& cert);

/// Checks strand counts, leaf membership in P', leaf generator products,
/// node arities, and that the tree certifies at least the declared level.
/// Throws DomainError describing the first defect.
void validate(const GammaCertificate& cert);

/// Derived series tree: leaves in P' = P^(1); a node [a, b] with both
/// children at level d - 1 is at level d.
struct DerivedNode {
  BraidWord leaf;
  std::vector<CommutatorGenerator> generators;
  std::vector<DerivedNode> children;  // empty (leaf) or exactly two

  bool is_leaf() const { return children.empty(); }
};

struct DerivedCertificate {
  int strands = 1;
  int level = 1;
  DerivedNode root;
};

int certified_level(const DerivedNode& node);
BraidWord evaluate(const DerivedCertificate& cert);
void validate(const DerivedCertificate& cert);

/// Rewrites a P^(d) tree as a gamma tree: [a, b] becomes a gamma commutator
/// of the transcribed a with b as a P' leaf. The result certifies level d,
/// which contains P^(d+1) inside gamma_d(P') as the special case d -> n.
GammaCertificate transcribe(const DerivedCertificate& cert);

/// Random product of `size` conjugated commutators of standard generators.
GammaCertificate sample_p_prime(int strands, std::uint64_t seed, int size);

/// Random level-n tree: a product of `size` commutators [level n-1, P'],
/// each conjugated by a short random word. For k = 2 every word is trivial.
GammaCertificate sample_gamma(int level, int strands, std::uint64_t seed, int size = 1);

DerivedCertificate sample_derived(int level, int strands, std::uint64_t seed);

}  // namespace deltaft
