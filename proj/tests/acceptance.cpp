// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
// each criterion under its own time limit. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/combing.hpp"
#include "deltaft/delta.hpp"
#include "deltaft/invariants.hpp"
#include "deltaft/lab.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace deltaft;
using deltaft::testing::random_pure;
using deltaft::testing::random_word;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Collects failures without stopping; the first few are reported.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }

  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + first_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

// Relators of B_k as words that equal the identity.
BraidWord random_relator(Rng& rng, int k) {
  const int kind = k >= 3 ? rng.uniform(0, 2) : 0;
  if (kind == 0) {
    const int i = rng.uniform(1, k - 1);
    const int e = rng.sign();
    return BraidWord(k, {e * i, -e * i});
  }
  if (kind == 1) {
    const int i = rng.uniform(1, k - 2);
    // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    return BraidWord(k, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
  }
  if (k < 4) return BraidWord(k, {1, 2, 1, -2, -1, -2});
  int i = 0, j = 0;
  do {
    i = rng.uniform(1, k - 1);
    j = rng.uniform(1, k - 1);
  } while (std::abs(i - j) < 2);
  return BraidWord(k, {i, j, -i, -j});
}

BraidWord splice(const BraidWord& w, std::size_t pos, const BraidWord& piece) {
  std::vector<int> letters(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos), w.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

Outcome word_problem() {
  Checker c;
  Rng rng(1001);
  for (int n = 0; n < 1000; ++n) {
    const int k = rng.uniform(2, 7);
    BraidWord w = random_word(rng, k, rng.uniform(0, 60));
    BraidWord v = w;
    // Relator insertions, some conjugated by a random word.
    const int moves = rng.uniform(1, 6);
    for (int m = 0; m < moves; ++m) {
      BraidWord r = random_relator(rng, k);
      if (rng.uniform(0, 1)) {
        const BraidWord u = random_word(rng, k, rng.uniform(1, 6));
        r = concat_raw(concat_raw(u, r), invert(u));
      }
      if (v.size() + r.size() > 200) break;
      v = splice(v, static_cast<std::size_t>(rng.uniform(0, static_cast<int>(v.size()))), r);
    }
    c.expect(v.size() <= 200, "word longer than 200 letters");
    c.expect(braid_eq(w, v), "equal pair rejected: " + w.to_string() + " vs " + v.to_string());
  }
  for (int n = 0; n < 200; ++n) {
    const int k = rng.uniform(2, 7);
    BraidWord w = random_word(rng, k, rng.uniform(1, 60));
    std::vector<int> letters = w.letters();
    // Ground truth: the perturbation changes the exponent sum or the permutation.
    switch (rng.uniform(0, 2)) {
      case 0: {
        auto& l = letters[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(letters.size()) - 1))];
        l = -l;
        break;
      }
      case 1:
        letters.insert(letters.begin() + rng.uniform(0, static_cast<int>(letters.size())),
                       rng.sign() * rng.uniform(1, k - 1));
        break;
      default:
        letters.erase(letters.begin() + rng.uniform(0, static_cast<int>(letters.size()) - 1));
        break;
    }
    const BraidWord v(k, letters);
    const BraidWord u = random_word(rng, k, rng.uniform(0, 20));
    const BraidWord disguised = concat_raw(concat_raw(u, concat_raw(v, random_relator(rng, k))), invert(u));
    const bool really_unequal = w.exponent_sum() != v.exponent_sum() || !(permutation(w) == permutation(v));
    c.expect(really_unequal, "perturbation kept the invariants");
    c.expect(!braid_eq(concat_raw(concat_raw(u, w), invert(u)), disguised), "unequal pair accepted");
  }
  return c.outcome("1000 equal pairs, 200 unequal pairs");
}

Outcome combing_round_trip() {
  Checker c;
  Rng rng(1002);
  for (int n = 0; n < 500; ++n) {
    const int k = rng.uniform(1, 6);
    BraidWord p = random_pure(rng, k, rng.uniform(0, 24));
    while (p.size() > 40) p = random_pure(rng, k, rng.uniform(0, 12));
    c.expect(is_pure(p), "sampler produced a non-pure word");
    c.expect(braid_eq(expand(comb(p)), p), "round trip failed for " + p.to_string());
  }
  return c.outcome("500 pure braids");
}

Outcome delta_trivialization() {
  Checker c;
  const BraidWord relator = commutator(pure_gen(1, 2, 3), pure_gen(2, 3, 3));
  const DeltaScript one = delta_trivialize(relator);
  c.expect(one.moves.size() == 1, "single commutator needed " + std::to_string(one.moves.size()) + " moves");
  c.expect(braid_eq(one.result(), relator), "single commutator script wrong");
  for (std::uint64_t n = 0; n < 200; ++n) {
    const int k = 2 + static_cast<int>(n % 4);
    const BraidWord w = evaluate(sample_p_prime(k, derive_seed(1003, n), 1 + static_cast<int>(n % 2)));
    const DeltaScript s = delta_trivialize(w);
    c.expect(s.base.empty(), "script base not empty");
    c.expect(braid_eq(s.result(), w), "script does not rebuild " + w.to_string());
  }
  return c.outcome("200 P' elements plus the single relator");
}

Outcome witnesses() {
  Checker c;
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      const int k = 3 + static_cast<int>(t % 2);
      const GammaCertificate cert = sample_gamma(n, k, derive_seed(1004, 100 * n + t), 1);
      const MarkedBraid m = delta_n_witness(cert);
      c.expect(m.order() == n, "wrong number of site-sets");
      const BraidWord w = evaluate(cert);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        c.expect(braid_eq(m.subset_word(mask), BraidWord(k)), "subset " + subset_label(mask) + " not trivial");
      c.expect(braid_eq(m.subset_word(0), w), "empty subset differs from the sample");
      const BraidWord closed = compose(w, shift_braid(k));
      c.expect(jones(m.link_word(0)) == jones(closed), "L_empty Jones differs");
      c.expect(alexander(m.link_word(0)) == alexander(closed), "L_empty Alexander differs");
      c.expect(linking_matrix(m.link_word(0)) == linking_matrix(closed), "L_empty linking differs");
    }
  }
  return c.outcome("60 certificates, n = 1, 2, 3");
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& r : v)
    if (r != 0) return false;
  return true;
}

Outcome cn_vanishing() {
  Checker c;
  for (int n = 1; n <= 3; ++n) {
    const Invariant series = parse_invariant("series:" + std::to_string(2 * n - 1));
    const Invariant a2 = parse_invariant("a2");
    for (std::uint64_t t = 0; t < 25; ++t) {
      const int k = 3 + static_cast<int>(t % 2);
      const MarkedBraid m = sample_marked_braid(n, k, derive_seed(1005, 100 * n + t), 6);
      const AltSumReport r = alt_sum(m, series);
      c.expect(r.vanishes(), "marked braid series sum nonzero");
      c.expect(r.recompute_total() == r.total, "report total inconsistent");
      if (n >= 2) c.expect(alt_sum(m, a2).vanishes(), "marked braid a2 sum nonzero");

      const IdealProduct ip = sample_ideal_product(n, k, derive_seed(1006, 100 * n + t));
      std::vector<Rational> total(static_cast<std::size_t>(2 * n));
      Integer a2_total = 0;
      for (const auto& term : expand_ideal_product(ip)) {
        const auto u = jones_series(term.word, 2 * n - 1).coefficients;
        for (std::size_t d = 0; d < total.size(); ++d) total[d] += term.sign * u[d];
        if (n >= 2) a2_total += term.sign * conway_a2(term.word);
      }
      c.expect(all_zero(total), "ideal expansion series sum nonzero");
      if (n >= 2) c.expect(a2_total == 0, "ideal expansion a2 sum nonzero");
    }
  }
  return c.outcome("75 marked braids, 75 ideal expansions");
}

Outcome theorem_desk_check() {
  Checker c;
  for (int n = 1; n <= 3; ++n)
    for (int k = 3; k <= 4; ++k) {
      const TheoremReport r = verify_theorem_2_1_AC(n, k, 1007 + static_cast<std::uint64_t>(10 * n + k), 25);
      c.expect(r.trials.size() == 25, "missing trials");
      for (const auto& t : r.trials)
        c.expect(t.agree, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " trial seed " +
                              std::to_string(t.seed) + " disagrees");
      c.expect(r.pass, "report does not pass");
    }
  return c.outcome("150 trials");
}

Outcome delta_conservation() {
  Checker c;
  Rng rng(1008);
  for (int n = 0; n < 500; ++n) {
    const int k = rng.uniform(3, 6);
    const BraidWord base = random_word(rng, k, rng.uniform(0, 14));
    const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(base.size())));
    const BraidWord after = apply_insertions(base, {sample_insertion(rng, k, pos, 3)});
    c.expect(closure_components(after).count == closure_components(base).count, "component count changed");
    c.expect(linking_matrix(after) == linking_matrix(base), "linking matrix changed");
    c.expect(permutation(after) == permutation(base), "permutation changed");
  }
  for (int n = 0; n < 100; ++n) {
    const int k = rng.uniform(3, 5);
    const BraidWord base = sample_knot_braid(rng, k, 4, 12);
    const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(base.size())));
    const BraidWord after = apply_insertions(base, {sample_insertion(rng, k, pos, 3)});
    c.expect(abs(conway_a2(after) - conway_a2(base)) == 1, "a2 changed by other than one on " + base.to_string());
  }
  return c.outcome("500 insertions, 100 knot a2 checks");
}

Outcome slides() {
  Checker c;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const int n = static_cast<int>(t % 3);
    SlideState s = connected_sum_normalize(sample_ideal_product(n, 3, derive_seed(1009, t)));
    std::vector<LaurentPoly> start;
    for (const auto& term : expand_slide_state(s)) start.push_back(jones(term.word));
    while (s.m > 0) {
      const BraidWord g = slide_conjugator(s);
      const SlideState next = slide_step(s);
      const auto in = expand_slide_state(s);
      const auto out = expand_slide_state(next);
      c.expect(in.size() == out.size(), "term count changed");
      for (std::size_t i = 0; i < in.size() && i < out.size(); ++i) {
        c.expect(braid_eq(compose({g, in[i].word, invert(g)}), out[i].word), "slide is not the declared conjugate");
        c.expect(in[i].sign == out[i].sign, "term sign changed");
        c.expect(jones(out[i].word) == start[i], "term Jones changed");
      }
      s = next;
    }
    c.expect(is_in_p_prime(residual(s).y), "residual y-part not in P'");
  }
  return c.outcome("20 slide states, n <= 2");
}

Outcome invariant_engine() {
  Checker c;
  Rng rng(1010);
  for (int n = 0; n < 1000; ++n) {
    const int k = 1 + n % 4;
    const BraidWord w = random_word(rng, k, n % 13);
    c.expect(kauffman_bracket(w) == testing::bracket_by_states(w), "bracket mismatch on " + w.to_string());
  }
  for (int n = 0; n < 200; ++n) {
    const int k = rng.uniform(2, 5);
    const BraidWord w = random_word(rng, k, rng.uniform(0, 14));
    const BraidWord u = random_word(rng, k, rng.uniform(0, 8));
    c.expect(jones(compose({u, w, invert(u)})) == jones(w), "conjugation changed Jones");
    const BraidWord stab = compose(embed(w, k + 1), BraidWord::generator(k + 1, rng.sign() * k));
    c.expect(jones(stab) == jones(w), "stabilization changed Jones");
  }
  for (int n = 0; n < 20; ++n) {
    const int k = rng.uniform(2, 3);
    const BraidWord p = random_pure(rng, k, rng.uniform(0, 8));
    const BraidWord q = random_pure(rng, k, rng.uniform(0, 8));
    const BraidWord sum = compose(braid_connected_sum(p, q), shift_braid(2 * k));
    c.expect(jones(sum) == jones(compose(p, shift_braid(k))) * jones(compose(q, shift_braid(k))),
             "connected sum not multiplicative");
  }
  const BraidWord trefoil = BraidWord::parse("B2 1 1 1");
  c.expect(jones_integral(trefoil).to_string("t") == "t + t^3 - t^4", "golden trefoil Jones");
  c.expect(alexander(trefoil).to_string("t") == "t^-1 - 1 + t", "golden trefoil Alexander");
  return c.outcome("1000 bracket words, 200 Markov trials, 20 sums, golden values");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "word problem soundness", 30, word_problem},
      {2, "combing round trip", 60, combing_round_trip},
      {3, "delta trivialization", 60, delta_trivialization},
      {4, "delta_n witnesses", 60, witnesses},
      {5, "C_n vanishing", 120, cn_vanishing},
      {6, "gamma_n(P') series agreement", 120, theorem_desk_check},
      {7, "delta move conservation", 60, delta_conservation},
      {8, "slide machinery", 120, slides},
      {9, "invariant engine cross-validation", 120, invariant_engine},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > cr.limit_seconds) o = {false, "over the time limit"};
    if (!o.ok) ++failed;
    std::printf("%s [%d] %s: %s (%.2f s, limit %.0f s)\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name, o.detail.c_str(),
                seconds, cr.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
