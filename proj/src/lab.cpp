#include "deltaft/lab.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "deltaft/combing.hpp"
#include "deltaft/error.hpp"
#include "deltaft/invariants.hpp"

namespace deltaft {

void validate(const IdealProduct& ip) {
  if (ip.strands < 1) throw DomainError("ideal product: bad strand count");
  if (ip.xs.size() > 20) throw DomainError("ideal product: too many factors");
  for (std::size_t s = 0; s < ip.xs.size(); ++s) {
    const BraidWord x(ip.strands, ip.xs[s].letters());
    if (!is_pure(x) || !is_in_p_prime(x))
      throw DomainError("ideal product: x_" + std::to_string(s + 1) + " is not in P'");
  }
  if (!is_pure(BraidWord(ip.strands, ip.y.letters()))) throw DomainError("ideal product: y is not pure");
}

namespace {

std::vector<SignedTerm> expand_terms(int strands, const std::vector<BraidWord>& xs, const BraidWord& tail) {
  const std::size_t n = xs.size();
  std::vector<SignedTerm> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SignedTerm term;
    term.mask = mask;
    term.sign = (n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0 ? 1 : -1;
    term.word = BraidWord(strands);
    for (std::size_t s = 0; s < n; ++s)
      if (mask >> s & 1U) term.word = compose(term.word, BraidWord(strands, xs[s].letters()));
    term.word = compose(term.word, tail);
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

std::vector<SignedTerm> expand_ideal_product(const IdealProduct& ip) {
  validate(ip);
  const BraidWord y(ip.strands, ip.y.letters());
  return expand_terms(ip.strands, ip.xs, compose(y, shift_braid(ip.strands)));
}

void validate(const SlideState& s) {
  if (s.k < 1) throw DomainError("slide state: bad k");
  if (s.m < 0 || s.m > s.k) throw DomainError("slide state: m must lie in 0..k");
  const int big = 2 * s.k;
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    const BraidWord x(big, s.xs[i].letters());
    if (!is_pure(x) || !is_in_p_prime(x))
      throw DomainError("slide state: x_" + std::to_string(i + 1) + " is not in P'");
  }
  const BraidWord z(big, s.z.letters());
  if (!is_pure(z) || !is_in_p_prime(z)) throw DomainError("slide state: z is not in P'");
  for (int l : s.y.letters())
    if (std::abs(l) >= s.k) throw DomainError("slide state: y must live on strands 1..k");
  if (!is_pure(BraidWord(s.k, s.y.letters()))) throw DomainError("slide state: y is not pure");
}

namespace {

BraidWord big_y(const SlideState& s) { return BraidWord(2 * s.k, s.y.letters()); }

}  // namespace

std::vector<SignedTerm> expand_slide_state(const SlideState& s) {
  validate(s);
  const int big = 2 * s.k;
  const BraidWord y = big_y(s);
  const BraidWord tail =
      compose({BraidWord(big, s.z.letters()), y, conjugate_shift(invert(y), s.m), shift_braid(big)});
  return expand_terms(big, s.xs, tail);
}

SlideState connected_sum_normalize(const IdealProduct& ip) {
  validate(ip);
  SlideState s;
  s.k = ip.strands;
  for (const auto& x : ip.xs) s.xs.push_back(BraidWord(2 * ip.strands, x.letters()));
  s.z = BraidWord(2 * ip.strands);
  s.y = BraidWord(ip.strands, ip.y.letters());
  s.m = ip.strands;
  return s;
}

BraidWord slide_conjugator(const SlideState& s) { return conjugate_shift(big_y(s), s.m); }

SlideState slide_step(const SlideState& s) {
  validate(s);
  if (s.m == 0) throw DomainError("slide_step: m is already 0");
  const BraidWord g = slide_conjugator(s);
  const BraidWord g_inv = invert(g);
  const BraidWord y = big_y(s);
  SlideState out = s;
  for (auto& x : out.xs) x = compose({g, BraidWord(2 * s.k, x.letters()), g_inv});
  out.z = compose({g, BraidWord(2 * s.k, s.z.letters()), g_inv, g, y, g_inv, invert(y)});
  out.m = s.m - 1;
  return out;
}

IdealProduct residual(const SlideState& s) {
  if (s.m != 0) throw DomainError("residual: slide the state down to m = 0 first");
  IdealProduct ip;
  ip.strands = 2 * s.k;
  ip.xs = s.xs;
  ip.y = BraidWord(2 * s.k, s.z.letters());
  return ip;
}

BraidWord sample_knot_braid(Rng& rng, int k, int min_length, int max_length) {
  if (k < 1) throw DomainError("sample_knot_braid: bad strand count");
  if (k == 1) return BraidWord(1);
  // A k-cycle needs at least k - 1 letters, with parity k - 1 mod 2.
  min_length = std::max(min_length, k - 1);
  max_length = std::max(max_length, min_length + 1);
  for (;;) {
    const int length = rng.uniform(min_length, max_length);
    std::vector<int> letters;
    for (int n = 0; n < length; ++n) letters.push_back(rng.sign() * rng.uniform(1, k - 1));
    BraidWord w(k, std::move(letters));
    if (permutation(w).cycles().size() == 1) return w;
  }
}

BraidWord sample_pure_braid(Rng& rng, int k, int length) {
  BraidWord out(k);
  if (k < 2) return out;
  for (int n = 0; n < length; ++n) {
    const int j = rng.uniform(2, k);
    out = compose(out, power(pure_gen(rng.uniform(1, j - 1), j, k), rng.sign()));
  }
  return out;
}

DeltaInsertion sample_insertion(Rng& rng, int k, std::size_t position, int max_conjugator) {
  if (k < 3) throw DomainError("delta insertions need at least three strands");
  DeltaInsertion m;
  m.position = position;
  m.j = rng.uniform(3, k);
  m.i = rng.uniform(2, m.j - 1);
  m.h = rng.uniform(1, m.i - 1);
  m.sign = rng.sign();
  const int length = rng.uniform(0, max_conjugator);
  for (int n = 0; n < length; ++n) m.conjugator.push_back(rng.sign() * rng.uniform(1, k - 1));
  return m;
}

MarkedBraid sample_marked_braid(int n, int k, std::uint64_t seed, int base_length) {
  if (k < 3) throw DomainError("sample_marked_braid: need at least three strands");
  Rng rng(seed);
  MarkedBraid out;
  out.base = sample_knot_braid(rng, k, base_length, base_length + 1);
  out.closer = BraidWord(k);
  std::set<std::size_t> used;
  for (int s = 0; s < n; ++s) {
    std::vector<DeltaInsertion> set;
    const int count = rng.uniform(1, 2);
    for (int c = 0; c < count; ++c) {
      std::size_t pos = 0;
      do {
        pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(out.base.size())));
      } while (used.count(pos) && used.size() <= out.base.size());
      if (used.count(pos)) break;
      used.insert(pos);
      set.push_back(sample_insertion(rng, k, pos, 2));
    }
    out.site_sets.push_back(std::move(set));
  }
  return out;
}

IdealProduct sample_ideal_product(int n, int k, std::uint64_t seed) {
  if (k < 3) throw DomainError("sample_ideal_product: need at least three strands");
  Rng rng(seed);
  IdealProduct ip;
  ip.strands = k;
  for (int s = 0; s < n; ++s) ip.xs.push_back(evaluate(sample_p_prime(k, rng.next(), 1)));
  ip.y = sample_pure_braid(rng, k, rng.uniform(1, 3));
  return ip;
}

TheoremReport verify_theorem_2_1_AC(int n, int k, std::uint64_t seed, int trials) {
  if (n < 1 || n > kTheoremLevelBound)
    throw DomainError("level n must lie in 1.." + std::to_string(kTheoremLevelBound));
  if (k < 2 || k > kTheoremStrandBound)
    throw DomainError("strand count must lie in 2.." + std::to_string(kTheoremStrandBound));
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  TheoremReport report;
  report.n = n;
  report.k = k;
  report.seed = seed;
  report.pass = true;
  const int dmax = 2 * n - 1;
  for (int t = 0; t < trials; ++t) {
    TheoremTrial trial;
    trial.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial.seed);
    trial.p_cert = sample_gamma(n, k, rng.next(), 1);
    trial.p = evaluate(trial.p_cert);
    if (trial.p.empty()) trial.note = "sampled p is the identity";
    trial.b = sample_knot_braid(rng, k, 4, 10);
    const BraidWord pb = compose(trial.p, trial.b);
    trial.coeffs_base = jones_series(trial.b, dmax).coefficients;
    trial.coeffs_mod = jones_series(pb, dmax).coefficients;
    trial.a2_base = conway_a2(trial.b);
    trial.a2_mod = conway_a2(pb);
    trial.a2_checked = dmax >= 2;
    trial.agree = trial.coeffs_base == trial.coeffs_mod && (!trial.a2_checked || trial.a2_base == trial.a2_mod);
    report.pass = report.pass && trial.agree;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace deltaft
