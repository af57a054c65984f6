#include "deltaft/certificate.hpp"

#include <algorithm>

#include "deltaft/combing.hpp"
#include "deltaft/error.hpp"
#include "deltaft/random.hpp"

namespace deltaft {

BraidWord CommutatorGenerator::word(int strands) const {
  const BraidWord c(strands, conjugator.letters());
  return compose({c, commutator(pure_gen(left, strands), pure_gen(right, strands)), invert(c)});
}

GammaNode GammaNode::leaf(BraidWord w, std::vector<CommutatorGenerator> generators) {
  GammaNode n;
  n.kind = Kind::Leaf;
  n.word = std::move(w);
  n.generators = std::move(generators);
  return n;
}

GammaNode GammaNode::commutator(GammaNode left, GammaNode right) {
  GammaNode n;
  n.kind = Kind::Commutator;
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  return n;
}

GammaNode GammaNode::product(std::vector<GammaNode> factors) {
  GammaNode n;
  n.kind = Kind::Product;
  n.children = std::move(factors);
  return n;
}

GammaNode GammaNode::conjugate(BraidWord by, GammaNode inner) {
  GammaNode n;
  n.kind = Kind::Conjugate;
  n.word = std::move(by);
  n.children.push_back(std::move(inner));
  return n;
}

int certified_level(const GammaNode& node) {
  switch (node.kind) {
    case GammaNode::Kind::Leaf:
      return 1;
    case GammaNode::Kind::Commutator:
      if (node.children.size() != 2) throw DomainError("certificate: commutator needs two children");
      certified_level(node.children[1]);
      return certified_level(node.children[0]) + 1;
    case GammaNode::Kind::Product: {
      if (node.children.empty()) throw DomainError("certificate: empty product");
      int level = certified_level(node.children.front());
      for (const auto& c : node.children) level = std::min(level, certified_level(c));
      return level;
    }
    case GammaNode::Kind::Conjugate:
      if (node.children.size() != 1) throw DomainError("certificate: conjugate needs one child");
      return certified_level(node.children[0]);
  }
  throw DomainError("certificate: unknown node kind");
}

BraidWord evaluate_raw(const GammaNode& node, int strands) {
  switch (node.kind) {
    case GammaNode::Kind::Leaf:
      return BraidWord(strands, node.word.letters());
    case GammaNode::Kind::Commutator: {
      const BraidWord p = evaluate_raw(node.children.at(0), strands);
      const BraidWord q = evaluate_raw(node.children.at(1), strands);
      return concat_raw(concat_raw(p, q), concat_raw(invert(p), invert(q)));
    }
    case GammaNode::Kind::Product: {
      BraidWord out(strands);
      for (const auto& c : node.children) out = concat_raw(out, evaluate_raw(c, strands));
      return out;
    }
    case GammaNode::Kind::Conjugate: {
      const BraidWord u(strands, node.word.letters());
      return concat_raw(concat_raw(u, evaluate_raw(node.children.at(0), strands)), invert(u));
    }
  }
  throw DomainError("certificate: unknown node kind");
}

BraidWord evaluate(const GammaCertificate& cert) {
  return evaluate_raw(cert.root, cert.strands).reduced();
}

namespace {

void validate_node(const GammaNode& node, int strands) {
  if (node.kind == GammaNode::Kind::Leaf || node.kind == GammaNode::Kind::Conjugate) {
    if (node.word.strands() != strands && !node.word.empty())
      throw DomainError("certificate: strand count mismatch in node word");
  }
  if (node.kind == GammaNode::Kind::Leaf) {
    const BraidWord w(strands, node.word.letters());
    if (!is_pure(w) || !is_in_p_prime(w)) throw DomainError("certificate: leaf is not in P'");
    if (!node.generators.empty()) {
      BraidWord product(strands);
      for (const auto& g : node.generators) product = compose(product, g.word(strands));
      if (!braid_eq(product, w)) throw DomainError("certificate: leaf generators do not multiply to the leaf");
    }
  }
  for (const auto& c : node.children) validate_node(c, strands);
}

void validate_derived_node(const DerivedNode& node, int strands) {
  if (node.is_leaf()) {
    const BraidWord w(strands, node.leaf.letters());
    if (!is_pure(w) || !is_in_p_prime(w)) throw DomainError("derived certificate: leaf is not in P'");
    return;
  }
  if (node.children.size() != 2) throw DomainError("derived certificate: node needs two children");
  for (const auto& c : node.children) validate_derived_node(c, strands);
}

BraidWord evaluate_derived(const DerivedNode& node, int strands) {
  if (node.is_leaf()) return BraidWord(strands, node.leaf.letters()).reduced();
  return commutator(evaluate_derived(node.children[0], strands), evaluate_derived(node.children[1], strands));
}

}  // namespace

void validate(const GammaCertificate& cert) {
  if (cert.strands < 1) throw DomainError("certificate: bad strand count");
  if (cert.level < 1) throw DomainError("certificate: level must be positive");
  validate_node(cert.root, cert.strands);
  const int level = certified_level(cert.root);
  if (level < cert.level)
    throw DomainError("certificate: tree certifies level " + std::to_string(level) + " but declares " +
                      std::to_string(cert.level));
}

int certified_level(const DerivedNode& node) {
  if (node.is_leaf()) return 1;
  if (node.children.size() != 2) throw DomainError("derived certificate: node needs two children");
  return std::min(certified_level(node.children[0]), certified_level(node.children[1])) + 1;
}

BraidWord evaluate(const DerivedCertificate& cert) { return evaluate_derived(cert.root, cert.strands); }

void validate(const DerivedCertificate& cert) {
  validate_derived_node(cert.root, cert.strands);
  if (certified_level(cert.root) < cert.level) throw DomainError("derived certificate: level too high");
}

namespace {

GammaNode transcribe_node(const DerivedNode& node, int strands) {
  if (node.is_leaf()) return GammaNode::leaf(BraidWord(strands, node.leaf.letters()), node.generators);
  return GammaNode::commutator(transcribe_node(node.children[0], strands),
                               GammaNode::leaf(evaluate_derived(node.children[1], strands)));
}

PureGenSpec random_spec(Rng& rng, int k) {
  const int j = rng.uniform(2, k);
  return {rng.uniform(1, j - 1), j};
}

BraidWord random_short_word(Rng& rng, int k, int max_length) {
  std::vector<int> letters;
  if (k < 2) return BraidWord(k);
  const int length = rng.uniform(0, max_length);
  for (int n = 0; n < length; ++n) letters.push_back(rng.sign() * rng.uniform(1, k - 1));
  return BraidWord(k, std::move(letters)).reduced();
}

GammaNode random_p_prime_leaf(Rng& rng, int k, int size) {
  std::vector<CommutatorGenerator> gens;
  BraidWord word(k);
  if (k >= 3) {
    for (int n = 0; n < size; ++n) {
      CommutatorGenerator g;
      g.conjugator = random_short_word(rng, k, 2);
      g.left = random_spec(rng, k);
      do {
        g.right = random_spec(rng, k);
      } while (g.right.i == g.left.i && g.right.j == g.left.j);
      word = compose(word, g.word(k));
      gens.push_back(std::move(g));
    }
  }
  return GammaNode::leaf(std::move(word), std::move(gens));
}

GammaNode random_gamma_node(Rng& rng, int level, int k, int size) {
  if (level <= 1) return random_p_prime_leaf(rng, k, size);
  std::vector<GammaNode> factors;
  for (int n = 0; n < std::max(1, size); ++n) {
    GammaNode comm = GammaNode::commutator(random_gamma_node(rng, level - 1, k, 1), random_p_prime_leaf(rng, k, 1));
    // Redraw commutators that are trivial, such as [p, p].
    for (int attempt = 0; attempt < 8 && k >= 3 && braid_eq(evaluate_raw(comm, k), BraidWord(k)); ++attempt)
      comm = GammaNode::commutator(random_gamma_node(rng, level - 1, k, 1), random_p_prime_leaf(rng, k, 1));
    BraidWord by = random_short_word(rng, k, 2);
    factors.push_back(by.empty() ? std::move(comm) : GammaNode::conjugate(std::move(by), std::move(comm)));
  }
  if (factors.size() == 1) return std::move(factors.front());
  return GammaNode::product(std::move(factors));
}

DerivedNode random_derived_node(Rng& rng, int level, int k) {
  DerivedNode node;
  if (level <= 1) {
    GammaNode leaf = random_p_prime_leaf(rng, k, 1);
    node.leaf = leaf.word;
    node.generators = leaf.generators;
    return node;
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    node.children = {random_derived_node(rng, level - 1, k), random_derived_node(rng, level - 1, k)};
    if (k < 3 || !braid_eq(evaluate_derived(node, k), BraidWord(k))) break;
  }
  return node;
}

}  // namespace

GammaCertificate transcribe(const DerivedCertificate& cert) {
  GammaCertificate out;
  out.strands = cert.strands;
  out.root = transcribe_node(cert.root, cert.strands);
  out.level = certified_level(out.root);
  return out;
}

GammaCertificate sample_p_prime(int strands, std::uint64_t seed, int size) {
  if (strands < 2) throw DomainError("sample_p_prime: need at least two strands");
  Rng rng(seed);
  GammaCertificate cert;
  cert.strands = strands;
  cert.level = 1;
  cert.root = random_p_prime_leaf(rng, strands, size);
  return cert;
}

GammaCertificate sample_gamma(int level, int strands, std::uint64_t seed, int size) {
  if (level < 1) throw DomainError("sample_gamma: level must be positive");
  if (strands < 2) throw DomainError("sample_gamma: need at least two strands");
  Rng rng(seed);
  GammaCertificate cert;
  cert.strands = strands;
  cert.level = level;
  cert.root = random_gamma_node(rng, level, strands, size);
  return cert;
}

DerivedCertificate sample_derived(int level, int strands, std::uint64_t seed) {
  if (level < 1) throw DomainError("sample_derived: level must be positive");
  if (strands < 2) throw DomainError("sample_derived: need at least two strands");
  Rng rng(seed);
  DerivedCertificate cert;
  cert.strands = strands;
  cert.level = level;
  cert.root = random_derived_node(rng, level, strands);
  return cert;
}

}  // namespace deltaft
