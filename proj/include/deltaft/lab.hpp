#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/certificate.hpp"
#include "deltaft/delta.hpp"
#include "deltaft/laurent.hpp"
#include "deltaft/random.hpp"

namespace deltaft {

/// (x_1 - 1) ... (x_n - 1) y t_k in the group ring of B_k.
struct IdealProduct {
  int strands = 1;
  std::vector<BraidWord> xs;
  BraidWord y;
};

struct SignedTerm {
  int sign = 1;
  std::uint64_t mask = 0;  // bit s - 1 set when x_s is taken
  BraidWord word;
};

void validate(const IdealProduct& ip);

/// All 2^n terms in ascending mask order: sign (-1)^(n - |T|) and word
/// (x_i for i in T, in increasing i) y t_k.
std::vector<SignedTerm> expand_ideal_product(const IdealProduct& ip);

/// Relation (x_1 - 1) ... (x_n - 1) z y (t^-m y^-1 t^m) t with t = t_{2k},
/// everything living in B_{2k}; y is the pure B_k word on strands 1..k.
struct SlideState {
  int k = 1;
  std::vector<BraidWord> xs;
  BraidWord z;
  BraidWord y;
  int m = 0;
};

void validate(const SlideState& s);

/// Terms of the represented relation, same order and signs as the ideal
/// expansion.
std::vector<SignedTerm> expand_slide_state(const SlideState& s);

/// Embeds into B_{2k} with m = k and z = 1; each term closes to the original
/// term's closure summed with the knot closure(y^-1 t_k).
SlideState connected_sum_normalize(const IdealProduct& ip);

/// g = t^-m y t^m, the braid that conjugates the relation at step m.
BraidWord slide_conjugator(const SlideState& s);

/// One slide: x_i' = g x_i g^-1, z' = (g z g^-1)(g y g^-1 y^-1), m - 1.
SlideState slide_step(const SlideState& s);

/// At m = 0 the y factors cancel: the state reads (x - 1)... z t_{2k}, so z
/// plays the role of y and lies in P'.
IdealProduct residual(const SlideState& s);

// Random inputs for property checks.

/// Random word in B_k whose permutation is a k-cycle, so the closure is a knot.
BraidWord sample_knot_braid(Rng& rng, int k, int min_length, int max_length);
BraidWord sample_pure_braid(Rng& rng, int k, int length);
DeltaInsertion sample_insertion(Rng& rng, int k, std::size_t position, int max_conjugator);
/// Knot-closing base word with n site-sets of one or two insertions each at
/// pairwise distinct positions.
MarkedBraid sample_marked_braid(int n, int k, std::uint64_t seed, int base_length);
IdealProduct sample_ideal_product(int n, int k, std::uint64_t seed);

struct TheoremTrial {
  std::uint64_t seed = 0;
  GammaCertificate p_cert;
  BraidWord p;
  BraidWord b;
  std::vector<Rational> coeffs_base;
  std::vector<Rational> coeffs_mod;
  Integer a2_base;
  Integer a2_mod;
  bool a2_checked = false;
  bool agree = false;
  std::string note;
};

struct TheoremReport {
  int n = 1;
  int k = 3;
  std::uint64_t seed = 0;
  std::vector<TheoremTrial> trials;
  bool pass = false;
};

inline constexpr int kTheoremLevelBound = 3;
inline constexpr int kTheoremStrandBound = 6;

/// For each trial, samples p in gamma_n(P_k') and a knot braid b, and
/// compares u_0 ... u_{2n-1} (plus a_2 once 2n - 1 >= 2) of closure(b) and
/// closure(p b).
TheoremReport verify_theorem_2_1_AC(int n, int k, std::uint64_t seed, int trials);

}  // namespace deltaft
