#include "doctest.h"

#include <bit>

#include "deltaft/combing.hpp"
#include "deltaft/delta.hpp"
#include "deltaft/error.hpp"
#include "deltaft/invariants.hpp"
#include "deltaft/lab.hpp"
#include "support.hpp"

using namespace deltaft;
using deltaft::testing::random_p_prime;
using deltaft::testing::random_pure;
using deltaft::testing::random_word;

namespace {

DeltaInsertion move_at(std::size_t pos, int h, int i, int j, int sign, std::vector<int> conj = {}) {
  DeltaInsertion m;
  m.position = pos;
  m.h = h;
  m.i = i;
  m.j = j;
  m.sign = sign;
  m.conjugator = std::move(conj);
  return m;
}

}  // namespace

TEST_CASE("apply_insertions basics") {
  const BraidWord base = BraidWord::parse("B3 1 2 -1");
  CHECK(apply_insertions(base, std::vector<DeltaInsertion>{}) == base);

  const BraidWord relator = commutator(pure_gen(1, 2, 3), pure_gen(2, 3, 3));
  CHECK(apply_insertions(BraidWord(3), {move_at(0, 1, 2, 3, 1)}) == relator);
  CHECK(apply_insertions(BraidWord(3), {move_at(0, 1, 2, 3, -1)}) == invert(relator));

  // Position p sits between letters p - 1 and p of the base.
  const BraidWord spliced = apply_insertions(base, {move_at(1, 1, 2, 3, 1)});
  CHECK(spliced == compose({base.slice(0, 1), relator, base.slice(1, 3)}));
  CHECK(apply_insertions(base, {move_at(3, 1, 2, 3, 1)}) == compose(base, relator));

  // Conjugated blocks.
  const BraidWord c = BraidWord::parse("B3 2 -1");
  CHECK(apply_insertions(BraidWord(3), {move_at(0, 1, 2, 3, 1, c.letters())}) ==
        compose({c, relator, invert(c)}));
}

TEST_CASE("apply_insertions errors") {
  const BraidWord base = BraidWord::parse("B4 1 2");
  CHECK_THROWS_AS(apply_insertions(base, {move_at(3, 1, 2, 3, 1)}), DomainError);
  CHECK_THROWS_AS(apply_insertions(base, {move_at(0, 2, 1, 3, 1)}), DomainError);
  CHECK_THROWS_AS(apply_insertions(base, {move_at(0, 1, 2, 5, 1)}), DomainError);
  CHECK_THROWS_AS(apply_insertions(base, {move_at(0, 1, 2, 3, 2)}), DomainError);
  CHECK_THROWS_AS(apply_insertions(base, {move_at(0, 1, 2, 3, 1, {4})}), DomainError);
  // Same set may stack at one position; different sets may not.
  CHECK_NOTHROW(apply_insertions(base, {move_at(1, 1, 2, 3, 1), move_at(1, 2, 3, 4, -1)}));
  CHECK_THROWS_AS(apply_insertions(base, std::vector<std::vector<DeltaInsertion>>{{move_at(1, 1, 2, 3, 1)}, {move_at(1, 2, 3, 4, -1)}}), DomainError);
}

TEST_CASE("delta insertions keep permutation, exponents and linking") {
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    const int k = rng.uniform(3, 6);
    const BraidWord base = random_word(rng, k, rng.uniform(0, 12));
    const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(base.size())));
    const BraidWord after = apply_insertions(base, {sample_insertion(rng, k, pos, 3)});
    CHECK(permutation(after) == permutation(base));
    CHECK(linking_matrix(after) == linking_matrix(base));
    CHECK(closure_components(after).count == closure_components(base).count);
    const BraidWord p = random_pure(rng, k, 10);
    const BraidWord p_after = apply_insertions(p, {sample_insertion(rng, k, 0, 3)});
    CHECK(exponent_vector(p_after) == exponent_vector(p));
  }
}

TEST_CASE("a single delta move changes a2 by one") {
  Rng rng(42);
  for (int n = 0; n < 100; ++n) {
    const int k = rng.uniform(3, 5);
    const BraidWord base = sample_knot_braid(rng, k, 4, 12);
    const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(base.size())));
    const BraidWord after = apply_insertions(base, {sample_insertion(rng, k, pos, 3)});
    const Integer diff = conway_a2(after) - conway_a2(base);
    CHECK(abs(diff) == 1);
  }
}

TEST_CASE("delta_trivialize") {
  CHECK(delta_trivialize(BraidWord(4)).moves.empty());
  const BraidWord relator = commutator(pure_gen(1, 2, 3), pure_gen(2, 3, 3));
  const DeltaScript one = delta_trivialize(relator);
  CHECK(one.moves.size() == 1);
  CHECK(one.holds());
  CHECK_THROWS_AS(delta_trivialize(pure_gen(1, 2, 3)), DomainError);
  CHECK_THROWS_AS(delta_trivialize(BraidWord::parse("B3 1")), DomainError);

  Rng rng(43);
  for (int n = 0; n < 200; ++n) {
    const int k = rng.uniform(2, 5);
    const BraidWord w = random_p_prime(rng, k, rng.uniform(0, k >= 4 ? 2 : 3));
    const DeltaScript script = delta_trivialize(w);
    CHECK(script.base.empty());
    CHECK(braid_eq(script.result(), w));
    // One move per commutator factor, layer by layer.
    std::size_t factors = 0;
    if (k >= 3)
      for (const auto& layer : comb(w).layers) factors += decompose_layer(layer).factors.size();
    CHECK(script.moves.size() == factors);
    CHECK(delta_trivialize(w).moves == script.moves);
  }
}

TEST_CASE("equal exponent vectors are delta connected") {
  Rng rng(44);
  for (int n = 0; n < 30; ++n) {
    const int k = rng.uniform(3, 4);
    const BraidWord p = random_pure(rng, k, 6);
    // q: p times a P' element, rearranged by conjugation.
    const BraidWord u = random_pure(rng, k, 3);
    const BraidWord q = compose({u, p, random_p_prime(rng, k, 1), invert(u)});
    REQUIRE(exponent_vector(p) == exponent_vector(q));
    const DeltaScript script = delta_trivialize(compose(p, invert(q)));
    CHECK(braid_eq(compose(script.result(), q), p));
  }
}

TEST_CASE("delta_n_witness on small certificates") {
  const BraidWord relator = commutator(pure_gen(1, 2, 3), pure_gen(2, 3, 3));
  GammaCertificate one{3, 1, GammaNode::leaf(relator)};
  const MarkedBraid m1 = delta_n_witness(one);
  REQUIRE(m1.order() == 1);
  CHECK(m1.site_sets[0].size() == 1);
  CHECK(braid_eq(m1.subset_word(0), relator));
  CHECK(braid_eq(m1.subset_word(1), BraidWord(3)));
  CHECK(m1.closer == shift_braid(3));

  // [p, q] with p in P': set 1 trivializes p and its mirrored inverse.
  const BraidWord p = relator;
  const BraidWord q = commutator(pure_gen(1, 3, 3), pure_gen(1, 2, 3));
  GammaCertificate two{3, 2, GammaNode::commutator(GammaNode::leaf(p), GammaNode::leaf(q))};
  const MarkedBraid m2 = delta_n_witness(two);
  REQUIRE(m2.order() == 2);
  CHECK(braid_eq(m2.subset_word(0), commutator(p, q)));
  const BraidWord after_set1 = m2.subset_word(1);
  CHECK(after_set1 == BraidWord(3));
  for (std::uint64_t mask = 1; mask < 4; ++mask) CHECK(braid_eq(m2.subset_word(mask), BraidWord(3)));

  GammaCertificate bad{3, 3, two.root};
  CHECK_THROWS_AS(delta_n_witness(bad), DomainError);
  GammaCertificate not_p_prime{3, 1, GammaNode::leaf(pure_gen(1, 2, 3))};
  CHECK_THROWS_AS(delta_n_witness(not_p_prime), DomainError);
}

TEST_CASE("delta_n_witness on random certificates") {
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const int k = 3 + trial % 3;
      const GammaCertificate cert = sample_gamma(n, k, derive_seed(45, static_cast<std::uint64_t>(10 * n + trial)),
                                                 1 + trial % 2);
      const MarkedBraid m = delta_n_witness(cert);
      REQUIRE(m.order() == n);
      CHECK(braid_eq(m.subset_word(0), evaluate(cert)));
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        CHECK(braid_eq(m.subset_word(mask), BraidWord(k)));
    }
  }
}

TEST_CASE("witness merges extra levels into the last set") {
  // Declaring a lower level than the tree certifies still yields a witness.
  const GammaCertificate cert = sample_gamma(3, 3, 46, 1);
  GammaCertificate lower = cert;
  lower.level = 2;
  const MarkedBraid m = delta_n_witness(lower);
  REQUIRE(m.order() == 2);
  for (std::uint64_t mask = 1; mask < 4; ++mask) CHECK(braid_eq(m.subset_word(mask), BraidWord(3)));
}

TEST_CASE("alt_sum") {
  MarkedBraid none;
  none.base = BraidWord::parse("B2 1 1 1");
  const Invariant a2 = parse_invariant("a2");
  const AltSumReport r0 = alt_sum(none, a2);
  CHECK(r0.n == 0);
  REQUIRE(r0.entries.size() == 1);
  CHECK(r0.total == std::vector<Rational>{Rational(1)});

  const MarkedBraid marked = sample_marked_braid(2, 3, 47, 6);
  const AltSumReport rc = alt_sum(marked, parse_invariant("const"));
  CHECK(rc.entries.size() == 4);
  CHECK(rc.vanishes());
  for (std::size_t e = 0; e < rc.entries.size(); ++e) CHECK(rc.entries[e].mask == e);
  CHECK(rc.recompute_total() == rc.total);

  CHECK_THROWS_AS(parse_invariant("series:x"), ParseError);
  CHECK_THROWS_AS(parse_invariant("jonesy"), ParseError);
  CHECK(subset_label(0b101) == "{1,3}");
  CHECK(subset_label(0) == "{}");

  // Failures name the subset: a link closure breaks the knot-only series.
  MarkedBraid link;
  link.base = BraidWord::parse("B3 1 1");
  link.site_sets = {{move_at(0, 1, 2, 3, 1)}};
  try {
    alt_sum(link, parse_invariant("series:1"));
    FAIL("expected a failure");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("subset {}") != std::string::npos);
  }
}

TEST_CASE("series alternating sums vanish below twice the order") {
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const MarkedBraid m = sample_marked_braid(n, 3 + trial % 2, derive_seed(48, 10 * n + trial), 6);
      const AltSumReport r = alt_sum(m, parse_invariant("series:" + std::to_string(2 * n - 1)));
      CHECK(r.vanishes());
      if (n >= 2) CHECK(alt_sum(m, parse_invariant("a2")).vanishes());
    }
  }
}

TEST_CASE("witness alternating sums vanish") {
  for (int n = 1; n <= 2; ++n) {
    const MarkedBraid m = delta_n_witness(sample_gamma(n, 3, derive_seed(49, n), 1));
    CHECK(alt_sum(m, parse_invariant("series:" + std::to_string(2 * n - 1))).vanishes());
  }
}
