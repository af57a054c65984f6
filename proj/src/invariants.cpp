#include "deltaft/invariants.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>

#include "deltaft/error.hpp"

namespace deltaft {

ClosureComponents closure_components(const BraidWord& b) {
  const auto cycles = permutation(b).cycles();
  ClosureComponents out;
  out.count = static_cast<int>(cycles.size());
  out.component_of.assign(static_cast<std::size_t>(b.strands()), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int s : cycles[c]) out.component_of[static_cast<std::size_t>(s - 1)] = static_cast<int>(c);
  return out;
}

LinkingMatrix linking_matrix(const BraidWord& b) {
  const ClosureComponents comps = closure_components(b);
  const auto n = static_cast<std::size_t>(comps.count);
  std::vector<std::vector<long>> twice(n, std::vector<long>(n, 0));
  const auto crossings = crossing_strands(b);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto x = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(crossings[c].first - 1)]);
    const auto y = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(crossings[c].second - 1)]);
    if (x == y) continue;
    const long sign = b.letters()[c] > 0 ? 1 : -1;
    twice[x][y] += sign;
    twice[y][x] += sign;
  }
  LinkingMatrix out;
  out.entries.assign(n, std::vector<long>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (twice[x][y] % 2 != 0) throw DomainError("linking_matrix: odd crossing count");
      out.entries[x][y] = twice[x][y] / 2;
    }
  return out;
}

namespace {

// Planar matching of the 2k boundary points of a Temperley-Lieb diagram:
// top points 0..k-1, bottom points k..2k-1.
using Diagram = std::vector<std::uint8_t>;

class TemperleyLiebBasis {
 public:
  explicit TemperleyLiebBasis(int k) : k_(k) {
    Diagram id(static_cast<std::size_t>(2 * k));
    for (int p = 0; p < k; ++p) {
      id[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(k + p);
      id[static_cast<std::size_t>(k + p)] = static_cast<std::uint8_t>(p);
    }
    intern(id);
  }

  std::size_t size() const { return diagrams_.size(); }
  const Diagram& diagram(std::size_t id) const { return diagrams_[id]; }

  // D * e_i: returns (resulting diagram id, number of closed loops formed).
  std::pair<std::size_t, int> times_e(std::size_t id, int i) {
    auto& row = cache_[id];
    auto it = row.find(i);
    if (it != row.end()) return it->second;
    Diagram d = diagrams_[id];
    const auto b1 = static_cast<std::size_t>(k_ + i - 1);
    const auto b2 = static_cast<std::size_t>(k_ + i);
    std::pair<std::size_t, int> result;
    if (d[b1] == b2) {
      result = {id, 1};
    } else {
      const auto a = d[b1];
      const auto c = d[b2];
      d[a] = c;
      d[c] = a;
      d[b1] = static_cast<std::uint8_t>(b2);
      d[b2] = static_cast<std::uint8_t>(b1);
      result = {intern(d), 0};
    }
    cache_[id][i] = result;
    return result;
  }

  // Loops in the closure of a diagram (top p joined to bottom k + p).
  int closure_loops(std::size_t id) const {
    const Diagram& d = diagrams_[id];
    const int n = 2 * k_;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int loops = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int p = start;
      while (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        const int q = d[static_cast<std::size_t>(p)];
        seen[static_cast<std::size_t>(q)] = true;
        p = q < k_ ? q + k_ : q - k_;
      }
    }
    return loops;
  }

 private:
  std::size_t intern(const Diagram& d) {
    auto [it, inserted] = index_.try_emplace(d, diagrams_.size());
    if (inserted) {
      diagrams_.push_back(d);
      cache_.emplace_back();
    }
    return it->second;
  }

  int k_;
  std::vector<Diagram> diagrams_;
  std::map<Diagram, std::size_t> index_;
  std::vector<std::map<int, std::pair<std::size_t, int>>> cache_;
};

LaurentPoly loop_value() {
  return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

void check_bound(const BraidWord& b, int strand_bound) {
  if (b.strands() > strand_bound)
    throw DomainError("strand count " + std::to_string(b.strands()) + " exceeds bound " +
                      std::to_string(strand_bound));
}

}  // namespace

LaurentPoly kauffman_bracket(const BraidWord& b, int strand_bound) {
  check_bound(b, strand_bound);
  const int k = b.strands();
  const LaurentPoly d = loop_value();
  TemperleyLiebBasis basis(k);
  std::vector<LaurentPoly> state{LaurentPoly(1)};
  const BraidWord reduced = b.reduced();
  for (int letter : reduced.letters()) {
    const int i = std::abs(letter);
    const int id_shift = letter > 0 ? 1 : -1;
    std::vector<LaurentPoly> next(state.size());
    for (std::size_t id = 0; id < state.size(); ++id) {
      if (state[id].is_zero()) continue;
      next[id].add_scaled(state[id], 1, id_shift);
      auto [target, loops] = basis.times_e(id, i);
      if (target >= next.size()) next.resize(basis.size());
      if (loops == 0)
        next[target].add_scaled(state[id], 1, -id_shift);
      else
        next[target] += (state[id] * d).shifted(-id_shift);
    }
    next.resize(basis.size());
    state = std::move(next);
  }
  std::vector<LaurentPoly> d_powers{LaurentPoly(1)};
  LaurentPoly total;
  for (std::size_t id = 0; id < state.size(); ++id) {
    if (state[id].is_zero()) continue;
    const int loops = basis.closure_loops(id);
    while (static_cast<int>(d_powers.size()) < loops) d_powers.push_back(d_powers.back() * d);
    total += state[id] * d_powers[static_cast<std::size_t>(loops - 1)];
  }
  return total;
}

LaurentPoly jones(const BraidWord& b, int strand_bound) {
  const LaurentPoly bracket = kauffman_bracket(b, strand_bound);
  const long w = b.reduced().exponent_sum();
  LaurentPoly in_a = bracket.shifted(static_cast<int>(-3 * w));
  if (w % 2 != 0) in_a = -in_a;
  // t = A^-4, so t^(1/2) = A^-2.
  return in_a.exponents_divided(2).rescaled(-1);
}

LaurentPoly jones_integral(const BraidWord& b, int strand_bound) {
  return jones(b, strand_bound).exponents_divided(2);
}

SeriesExpansion series_from_jones(const LaurentPoly& v, int dmax) {
  if (dmax < 0) throw DomainError("jones_series: negative order");
  SeriesExpansion out;
  out.order = dmax;
  Integer factorial = 1;
  for (int d = 0; d <= dmax; ++d) {
    if (d > 0) factorial *= d;
    Integer sum = 0;
    for (const auto& [m, c] : v.terms()) {
      Integer power = 1;
      for (int n = 0; n < d; ++n) power *= m;
      sum += c * power;
    }
    Rational u(sum, factorial);
    u.canonicalize();
    out.coefficients.push_back(u);
  }
  return out;
}

SeriesExpansion jones_series(const BraidWord& b, int dmax, int dmax_bound) {
  if (dmax > dmax_bound)
    throw DomainError("jones_series: order " + std::to_string(dmax) + " exceeds bound " +
                      std::to_string(dmax_bound));
  if (closure_components(b).count != 1)
    throw DomainError("jones_series: closure is not a knot");
  return series_from_jones(jones_integral(b), dmax);
}

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Right-multiplies by the reduced Burau matrix of one letter. The matrix of
// s_i differs from the identity only in row i: (t, -t, 1) at columns
// i-1, i, i+1; for s_i^-1 the row is (1, -t^-1, t^-1). Columns outside
// 1..k-1 are dropped.
void burau_times_letter(PolyMatrix& m, int letter) {
  const int dim = static_cast<int>(m.size());
  const int i = std::abs(letter);
  const auto c = static_cast<std::size_t>(i - 1);
  for (auto& row : m) {
    const LaurentPoly mid = row[c];
    if (letter > 0) {
      if (i - 1 >= 1) row[c - 1].add_scaled(mid, 1, 1);
      row[c] = -mid.shifted(1);
      if (i + 1 <= dim) row[c + 1] += mid;
    } else {
      if (i - 1 >= 1) row[c - 1] += mid;
      row[c] = -mid.shifted(-1);
      if (i + 1 <= dim) row[c + 1].add_scaled(mid, 1, -1);
    }
  }
}

LaurentPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly previous(1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p].is_zero()) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && m[swap_row][p].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[p], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        LaurentPoly num = m[p][p] * m[r][c] - m[r][p] * m[p][c];
        m[r][c] = exact_divide(num, previous);
      }
      m[r][p] = LaurentPoly();
    }
    previous = m[p][p];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

LaurentPoly alexander(const BraidWord& b) {
  if (closure_components(b).count != 1) throw DomainError("alexander: closure is not a knot");
  const int k = b.strands();
  const auto dim = static_cast<std::size_t>(k - 1);
  PolyMatrix m(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t r = 0; r < dim; ++r) m[r][r] = LaurentPoly(1);
  const BraidWord reduced = b.reduced();
  for (int letter : reduced.letters()) burau_times_letter(m, letter);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m[r][c] = (r == c ? LaurentPoly(1) : LaurentPoly()) - m[r][c];
  LaurentPoly det = bareiss_determinant(std::move(m));
  // det(I - burau) = Delta(t) (1 + t + ... + t^{k-1})
  LaurentPoly geometric;
  for (int e = 0; e < k; ++e) geometric += LaurentPoly::monomial(1, e);
  LaurentPoly delta = exact_divide(det, geometric);
  if (delta.is_zero()) throw DomainError("alexander: vanishing determinant for a knot");
  if ((delta.low() + delta.high()) % 2 != 0) throw DomainError("alexander: asymmetric span");
  delta = delta.shifted(-(delta.low() + delta.high()) / 2);
  const Integer at_one = delta.evaluate_at_one();
  if (at_one == -1)
    delta = -delta;
  else if (at_one != 1)
    throw DomainError("alexander: value at 1 is " + at_one.get_str());
  return delta;
}

Integer conway_a2(const LaurentPoly& alexander_poly) {
  // Delta(t) = 1 + a2 (t - 2 + t^-1) + ..., so Delta''(1) = 2 a2 and, by
  // symmetry, a2 = sum c_m m^2 / 2.
  Integer twice = 0;
  for (const auto& [m, c] : alexander_poly.terms()) twice += c * m * m;
  if (!mpz_divisible_ui_p(twice.get_mpz_t(), 2)) throw DomainError("conway_a2: odd second moment");
  return twice / 2;
}

Integer conway_a2(const BraidWord& b) { return conway_a2(alexander(b)); }

}  // namespace deltaft
