#include "doctest.h"

#include "deltaft/artin.hpp"
#include "deltaft/braid.hpp"
#include "deltaft/combing.hpp"
#include "deltaft/error.hpp"
#include "deltaft/garside.hpp"
#include "deltaft/invariants.hpp"
#include "support.hpp"

using namespace deltaft;
using deltaft::testing::random_pure;
using deltaft::testing::random_word;

namespace {

BraidWord W(const char* text) { return BraidWord::parse(text); }

}  // namespace

TEST_CASE("parse and print") {
  CHECK(W("B3 1 1 2 -1").to_string() == "B3 1 1 2 -1");
  CHECK(W("B1").empty());
  CHECK_THROWS_AS(W("B3 3"), ParseError);
  CHECK_THROWS_AS(W("B3 0"), ParseError);
  CHECK_THROWS_AS(W("3 1"), ParseError);
  CHECK_THROWS_AS(W("B3 1x"), ParseError);
}

TEST_CASE("compose and invert") {
  CHECK(compose(W("B2 1"), W("B2 -1")).empty());
  CHECK(compose(W("B3 1"), W("B3 2")) == W("B3 1 2"));
  CHECK(compose(W("B3 1 2"), W("B3 -2 -1")).empty());
  CHECK_THROWS_AS(compose(W("B3 1"), W("B4 1")), DomainError);

  CHECK(invert(W("B3")).empty());
  CHECK(invert(W("B3 1 2")) == W("B3 -2 -1"));
  Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    BraidWord w = random_word(rng, 5, 30);
    CHECK(invert(invert(w)) == w);
    CHECK(compose(w, invert(w)).empty());
  }
}

TEST_CASE("free reduction is idempotent") {
  Rng rng(12);
  for (int n = 0; n < 100; ++n) {
    BraidWord w = random_word(rng, 4, rng.uniform(0, 200));
    BraidWord once = w.reduced();
    CHECK(once.reduced() == once);
    CHECK(is_freely_reduced(once.letters()));
  }
}

TEST_CASE("permutations") {
  CHECK(permutation(W("B2 1")).images() == std::vector<int>{2, 1});
  const Permutation t3 = permutation(shift_braid(3));
  CHECK(t3.cycles().size() == 1);
  CHECK(t3.cycle_notation() == "(1 2 3)");
  for (int j = 2; j <= 5; ++j)
    for (int i = 1; i < j; ++i) CHECK(is_pure(pure_gen(i, j, 5)));

  Rng rng(13);
  for (int n = 0; n < 100; ++n) {
    BraidWord a = random_word(rng, 6, 20);
    BraidWord b = random_word(rng, 6, 20);
    CHECK(permutation(compose(a, b)) == permutation(a).then(permutation(b)));
  }
}

TEST_CASE("pure generators") {
  CHECK(pure_gen(1, 2, 2) == W("B2 1 1"));
  CHECK(pure_gen(1, 3, 3) == W("B3 2 1 1 -2"));
  CHECK_THROWS_AS(pure_gen(2, 2, 3), DomainError);
  CHECK_THROWS_AS(pure_gen(1, 4, 3), DomainError);
}

TEST_CASE("shift braid") {
  CHECK(shift_braid(1).empty());
  CHECK(shift_braid(3) == W("B3 -2 -1"));
  for (int k = 1; k <= 6; ++k) CHECK(closure_components(shift_braid(k)).count == 1);
}

TEST_CASE("conjugate_shift") {
  const BraidWord p = pure_gen(1, 2, 4);
  CHECK(conjugate_shift(p, 0) == p);
  CHECK_THROWS_AS(conjugate_shift(W("B3 1"), 1), DomainError);

  // One shift moves p_{i,j} to p_{i+1,j+1} up to conjugation; on exponent
  // vectors it relabels strand s as s + 1 (mod k).
  Rng rng(14);
  for (int n = 0; n < 100; ++n) {
    const int k = rng.uniform(2, 5);
    BraidWord q = random_pure(rng, k, 12);
    CHECK(braid_eq(conjugate_shift(conjugate_shift(q, 1), -1), q));
    const ExponentVector before = exponent_vector(q);
    const ExponentVector after = exponent_vector(conjugate_shift(q, 1));
    ExponentVector relabeled(k);
    for (const auto& [key, v] : before.entries())
      relabeled.add(key.first % k + 1, key.second % k + 1, v);
    CHECK(after == relabeled);
  }
}

TEST_CASE("commutators") {
  Rng rng(15);
  BraidWord w = random_word(rng, 4, 10);
  CHECK(commutator(w, w).empty());
  CHECK(commutator(pure_gen(1, 2, 3), pure_gen(2, 3, 3)) ==
        compose({pure_gen(1, 2, 3), pure_gen(2, 3, 3), invert(pure_gen(1, 2, 3)),
                 invert(pure_gen(2, 3, 3))}));
  CHECK(is_in_p_prime(commutator(random_pure(rng, 4, 8), random_pure(rng, 4, 8))));
  CHECK_THROWS_AS(commutator(W("B3 1"), W("B4 1")), DomainError);
}

TEST_CASE("artin action") {
  CHECK(artin_action(W("B3")) == ArtinAutomorphism::identity(3));
  CHECK(artin_action(W("B3 1 2 1")) == artin_action(W("B3 2 1 2")));
  CHECK(artin_action(W("B4 1 3")) == artin_action(W("B4 3 1")));
  CHECK_FALSE(artin_action(W("B2 1")) == artin_action(W("B2 -1")));

  Rng rng(16);
  for (int n = 0; n < 200; ++n) {
    const int k = rng.uniform(2, 6);
    BraidWord a = random_word(rng, k, rng.uniform(0, 12));
    BraidWord b = random_word(rng, k, rng.uniform(0, 12));
    const auto fa = artin_action(a);
    CHECK(artin_action(compose(a, b)) == compose(fa, artin_action(b)));
    CHECK(compose(fa, artin_action(invert(a))) == ArtinAutomorphism::identity(k));
    for (const auto& img : fa.images) CHECK(is_freely_reduced(img));
  }
}

TEST_CASE("braid relations hold under braid_eq") {
  for (int k = 2; k <= 7; ++k) {
    for (int i = 1; i + 1 < k; ++i) {
      CHECK(braid_eq(BraidWord(k, {i, i + 1, i}), BraidWord(k, {i + 1, i, i + 1})));
      for (int j = i + 2; j < k; ++j) CHECK(braid_eq(BraidWord(k, {i, j}), BraidWord(k, {j, i})));
    }
  }
  CHECK_FALSE(braid_eq(W("B2 1"), W("B2 -1")));
  CHECK_THROWS_AS(braid_eq(W("B2 1"), W("B3 1")), DomainError);
}

TEST_CASE("braid_eq agrees with the Artin action on short words") {
  Rng rng(17);
  int equal_pairs = 0;
  for (int n = 0; n < 400; ++n) {
    const int k = rng.uniform(2, 5);
    BraidWord a = random_word(rng, k, rng.uniform(0, 8));
    BraidWord b = n % 2 == 0 ? random_word(rng, k, rng.uniform(0, 8))
                             : compose(a, BraidWord(k, {}));
    if (n % 4 == 1) {
      // Insert a braid relator at a random point.
      const int i = rng.uniform(1, std::max(1, k - 2));
      BraidWord rel = k >= 3 ? BraidWord(k, {i, i + 1, i, -(i + 1), -i, -(i + 1)}) : BraidWord(k);
      b = compose({a.slice(0, a.size() / 2), rel, a.slice(a.size() / 2, a.size())});
    }
    const bool by_artin = artin_action(a) == artin_action(b);
    CHECK(braid_eq(a, b) == by_artin);
    equal_pairs += by_artin;
  }
  CHECK(equal_pairs > 150);
}

TEST_CASE("garside form round trip") {
  Rng rng(18);
  for (int n = 0; n < 100; ++n) {
    const int k = rng.uniform(2, 6);
    BraidWord w = random_word(rng, k, 40);
    const GarsideForm form = garside_normal_form(w);
    CHECK(garside_normal_form(garside_to_word(form)) == form);
    CHECK(artin_action(garside_to_word(garside_normal_form(w.slice(0, 10)))) ==
          artin_action(w.slice(0, 10)));
  }
}

TEST_CASE("braid_eq is a congruence") {
  Rng rng(19);
  for (int n = 0; n < 100; ++n) {
    const int k = rng.uniform(3, 6);
    BraidWord a = random_word(rng, k, 30);
    BraidWord b = compose({a.slice(0, 10), BraidWord(k, {1, 2, 1, -2, -1, -2}), a.slice(10, 30)});
    BraidWord c = random_word(rng, k, 20);
    REQUIRE(braid_eq(a, b));
    CHECK(braid_eq(compose(c, a), compose(c, b)));
    CHECK(braid_eq(compose(a, c), compose(b, c)));
  }
}

TEST_CASE("relator products reduce to the identity") {
  Rng rng(20);
  for (int n = 0; n < 50; ++n) {
    const int k = 4;
    BraidWord w = random_word(rng, k, 15);
    // Artin relation p12 p13 p23 = p13 p23 p12 as a relator.
    BraidWord p12 = pure_gen(1, 2, k), p13 = pure_gen(1, 3, k), p23 = pure_gen(2, 3, k);
    BraidWord rel = compose({p12, p13, p23, invert(compose({p13, p23, p12}))});
    BraidWord v = random_word(rng, k, 10);
    BraidWord word = compose({w, commutator(p12, compose(p13, p23)), invert(w), v, rel, invert(v)});
    CHECK(braid_eq(word, BraidWord(k)));
  }
}

TEST_CASE("braid connected sum") {
  CHECK(braid_eq(braid_connected_sum(BraidWord(3), BraidWord(3)), BraidWord(6)));
  CHECK_THROWS_AS(braid_connected_sum(W("B2 1"), W("B2 1 1")), DomainError);
  const BraidWord r = braid_connected_sum(pure_gen(1, 2, 2), pure_gen(1, 2, 2));
  CHECK(r.strands() == 4);
  CHECK(is_pure(r));
  CHECK(closure_components(compose(r, shift_braid(4))).count == 1);
}
