#include "deltaft/combing.hpp"

#include <cstdlib>
#include <set>

#include "deltaft/error.hpp"

namespace deltaft {

long ExponentVector::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::add(int i, int j, long delta) {
  if (i > j) std::swap(i, j);
  long& v = entries_[{i, j}];
  v += delta;
  if (v == 0) entries_.erase({i, j});
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.strands_ != strands_) throw DomainError("exponent vector size mismatch");
  ExponentVector out = *this;
  for (const auto& [key, v] : other.entries_) out.add(key.first, key.second, v);
  return out;
}

ExponentVector exponent_vector(const BraidWord& p) {
  if (!is_pure(p)) throw DomainError("exponent_vector: input is not a pure braid");
  std::map<std::pair<int, int>, long> twice;
  const auto crossings = crossing_strands(p);
  for (std::size_t n = 0; n < crossings.size(); ++n) {
    auto [s, t] = crossings[n];
    if (s > t) std::swap(s, t);
    twice[{s, t}] += p.letters()[n] > 0 ? 1 : -1;
  }
  ExponentVector out(p.strands());
  for (const auto& [key, v] : twice) {
    if (v % 2 != 0) throw DomainError("exponent_vector: odd crossing count between pure strands");
    out.add(key.first, key.second, v / 2);
  }
  return out;
}

bool is_in_p_prime(const BraidWord& p) { return exponent_vector(p).is_zero(); }

namespace {

// Splits a pure word w in B_j as W * iota(u), W a free word in A_{1,j} ...
// A_{j-1,j} and u in B_{j-1}. Strand j is followed through the word; at
// each step the prefix equals W * iota(u_prefix) * d_s where d_s =
// s_{j-1} ... s_s carries strand j (passing under) from position j to s.
// conj[i] holds iota(u_prefix) A_i iota(u_prefix)^-1 as a free word.
std::pair<FreeWord, std::vector<int>> split_last_strand(const std::vector<int>& word, int j) {
  int s = j;
  std::vector<FreeWord> conj;
  for (int i = 1; i < j; ++i) conj.push_back({i});
  FreeWord layer;
  std::vector<int> rest;
  for (int letter : word) {
    const int g = std::abs(letter);
    const bool positive = letter > 0;
    if (g == s) {
      // d_s s_s = A_s d_{s+1};  d_s s_s^-1 = d_{s+1}
      if (positive) layer = free_concat(layer, conj[static_cast<std::size_t>(s - 1)]);
      ++s;
    } else if (g == s - 1) {
      // d_s s_{s-1} = d_{s-1};  d_s s_{s-1}^-1 = A_{s-1}^-1 d_{s-1}
      if (!positive) layer = free_concat(layer, free_invert(conj[static_cast<std::size_t>(s - 2)]));
      --s;
    } else {
      const int h = g < s ? g : g - 1;  // d_s s_g = s_h d_s
      rest.push_back(positive ? h : -h);
      // s_h^e A_i s_h^-e in terms of the A's:
      //   e=+1: A_h -> A_{h+1},              A_{h+1} -> A_{h+1}^-1 A_h A_{h+1}
      //   e=-1: A_h -> A_h A_{h+1} A_h^-1,   A_{h+1} -> A_h
      const auto lo = static_cast<std::size_t>(h - 1);
      const FreeWord a = conj[lo];
      const FreeWord b = conj[lo + 1];
      if (positive) {
        conj[lo] = b;
        conj[lo + 1] = free_concat(free_concat(free_invert(b), a), b);
      } else {
        conj[lo] = free_concat(free_concat(a, b), free_invert(a));
        conj[lo + 1] = a;
      }
    }
  }
  if (s != j) throw DomainError("comb: strand " + std::to_string(j) + " does not return home");
  return {std::move(layer), free_reduce(rest)};
}

}  // namespace

CombedForm comb(const BraidWord& p) {
  if (!is_pure(p)) throw DomainError("comb: input is not a pure braid");
  CombedForm form;
  form.strands = p.strands();
  std::vector<int> current = p.reduced().letters();
  for (int j = p.strands(); j >= 2; --j) {
    auto [layer, rest] = split_last_strand(current, j);
    form.layers.push_back(std::move(layer));
    current = std::move(rest);
  }
  return form;
}

BraidWord expand_layer(const FreeWord& layer, int j, int strands) {
  BraidWord out(strands);
  for (int letter : layer) {
    BraidWord g = pure_gen(std::abs(letter), j, strands);
    out = compose(out, letter > 0 ? g : invert(g));
  }
  return out;
}

BraidWord expand(const CombedForm& form) {
  BraidWord out(form.strands);
  for (std::size_t pos = 0; pos < form.layers.size(); ++pos)
    out = compose(out, expand_layer(form.layers[pos], form.layer_index(pos), form.strands));
  return out;
}

FreeWord CommutatorFactor::word() const {
  FreeWord comm = {a, b, -a, -b};
  if (sign < 0) comm = free_invert(comm);
  return free_concat(free_concat(conjugator, comm), free_invert(conjugator));
}

FreeWord CommutatorDecomposition::product() const {
  FreeWord out;
  for (const auto& f : factors) out = free_concat(out, f.word());
  return out;
}

namespace {

// [x, y] for signed letters x, y of distinct generators, as c [x_a, x_b]^s c^-1.
CommutatorFactor letter_commutator(int x, int y) {
  const int gx = std::abs(x);
  const int gy = std::abs(y);
  CommutatorFactor f;
  // [x^-1, y]         = x^-1 [x, y]^-1 x
  // [x, y^-1]         = y^-1 [x, y]^-1 y
  // [x^-1, y^-1]      = (y^-1 x^-1) [x, y] (x y)
  int sign = 1;
  if (x < 0 && y > 0) {
    f.conjugator = {-gx};
    sign = -1;
  } else if (x > 0 && y < 0) {
    f.conjugator = {-gy};
    sign = -1;
  } else if (x < 0 && y < 0) {
    f.conjugator = {-gy, -gx};
  }
  // [x_a, x_b] with a > b is [x_b, x_a]^-1.
  if (gx < gy) {
    f.a = gx;
    f.b = gy;
  } else {
    f.a = gy;
    f.b = gx;
    sign = -sign;
  }
  f.sign = sign;
  return f;
}

}  // namespace

CommutatorDecomposition decompose_layer(const FreeWord& layer) {
  std::set<int> gens;
  for (int letter : layer) gens.insert(std::abs(letter));
  for (int g : gens)
    if (exponent_sum(layer, g) != 0)
      throw DomainError("decompose_layer: generator " + std::to_string(g) +
                        " has nonzero exponent sum");

  CommutatorDecomposition out;
  // Invariant: product(out) * rem == layer (freely).
  FreeWord rem = free_reduce(layer);
  while (!rem.empty()) {
    int lowest = std::abs(rem.front());
    for (int letter : rem) lowest = std::min(lowest, std::abs(letter));
    // Leftmost pair of consecutive occurrences of `lowest` with opposite signs.
    std::size_t left = rem.size();
    std::size_t right = rem.size();
    std::size_t prev = rem.size();
    for (std::size_t n = 0; n < rem.size(); ++n) {
      if (std::abs(rem[n]) != lowest) continue;
      if (prev != rem.size() && rem[prev] == -rem[n]) {
        left = prev;
        right = n;
        break;
      }
      prev = n;
    }
    if (left == rem.size()) throw DomainError("decompose_layer: no cancelling pair (internal error)");
    // u x y v = (u [x, y] u^-1) u y x v, repeated until x meets its inverse.
    for (std::size_t n = left; n + 1 < right; ++n) {
      const int x = rem[n];
      const int y = rem[n + 1];
      CommutatorFactor f = letter_commutator(x, y);
      FreeWord prefix(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(n));
      f.conjugator = free_concat(prefix, f.conjugator);
      out.factors.push_back(std::move(f));
      std::swap(rem[n], rem[n + 1]);
    }
    rem = free_reduce(rem);
  }
  return out;
}

}  // namespace deltaft
