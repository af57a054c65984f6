#pragma once

#include <vector>

#include "deltaft/braid.hpp"
#include "deltaft/laurent.hpp"

namespace deltaft {

struct ClosureComponents {
  int count = 0;
  /// component_of[s - 1] is the 0-based component of strand s; components
  /// are numbered by their smallest strand.
  std::vector<int> component_of;
};

ClosureComponents closure_components(const BraidWord& b);

struct LinkingMatrix {
  /// Symmetric, zero diagonal, indexed by closure component.
  std::vector<std::vector<long>> entries;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

LinkingMatrix linking_matrix(const BraidWord& b);

/// Largest strand count accepted by the state-sum invariants.
inline constexpr int kDefaultStrandBound = 10;

/// Kauffman bracket of the closure as a Laurent polynomial in A, normalized
/// so the unknot is 1. Temperley-Lieb transfer matrix: s_i -> A + A^-1 e_i,
/// s_i^-1 -> A^-1 + A e_i, loop value -A^2 - A^-2.
LaurentPoly kauffman_bracket(const BraidWord& b, int strand_bound = kDefaultStrandBound);

/// Jones polynomial (-A^3)^-w <b> with t = A^-4, exponents counted in units
/// of t^(1/2).
LaurentPoly jones(const BraidWord& b, int strand_bound = kDefaultStrandBound);

/// The Jones polynomial of a knot with integer exponents of t. Throws
/// DomainError if a half power is present.
LaurentPoly jones_integral(const BraidWord& b, int strand_bound = kDefaultStrandBound);

/// Coefficients u_0 ... u_dmax of V(e^x) for a knot closure.
struct SeriesExpansion {
  int order = 0;
  std::vector<Rational> coefficients;

  friend bool operator==(const SeriesExpansion&, const SeriesExpansion&) = default;
};

inline constexpr int kDefaultSeriesBound = 12;

SeriesExpansion jones_series(const BraidWord& b, int dmax, int dmax_bound = kDefaultSeriesBound);
/// Same expansion from an already computed integral Jones polynomial.
SeriesExpansion series_from_jones(const LaurentPoly& v, int dmax);

/// Alexander polynomial of a knot closure from the reduced Burau matrix,
/// normalized symmetric with value 1 at t = 1.
LaurentPoly alexander(const BraidWord& b);

/// Second Conway coefficient from a normalized Alexander polynomial.
Integer conway_a2(const LaurentPoly& alexander_poly);
Integer conway_a2(const BraidWord& b);

}  // namespace deltaft
