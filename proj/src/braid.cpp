#include "deltaft/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "deltaft/error.hpp"
#include "deltaft/garside.hpp"

namespace deltaft {

namespace {

void require_same_strands(const BraidWord& a, const BraidWord& b, const char* op) {
  if (a.strands() != b.strands())
    throw DomainError(std::string(op) + ": strand count mismatch (B" +
                      std::to_string(a.strands()) + " vs B" + std::to_string(b.strands()) + ")");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw DomainError("braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw DomainError("braid needs at least one strand");
  for (int letter : letters_)
    if (letter == 0 || std::abs(letter) >= strands)
      throw DomainError("generator index " + std::to_string(letter) + " out of range for B" +
                        std::to_string(strands));
}

BraidWord BraidWord::generator(int strands, int letter) {
  return BraidWord(strands, {letter});
}

BraidWord BraidWord::parse(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head) || head.size() < 2 || (head[0] != 'B' && head[0] != 'b'))
    throw ParseError("braid word must start with Bk: '" + text + "'");
  int strands = 0;
  try {
    std::size_t used = 0;
    strands = std::stoi(head.substr(1), &used);
    if (used != head.size() - 1) throw ParseError("bad strand count");
  } catch (const std::exception&) {
    throw ParseError("bad strand count in '" + head + "'");
  }
  if (strands < 1) throw ParseError("strand count must be positive");
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + token + "'");
    }
    if (used != token.size()) throw ParseError("bad letter '" + token + "'");
    if (letter == 0 || std::abs(letter) >= strands)
      throw ParseError("letter " + token + " out of range for B" + std::to_string(strands));
    letters.push_back(letter);
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strands_);
  for (int letter : letters_) out += " " + std::to_string(letter);
  return out;
}

BraidWord BraidWord::reduced() const {
  BraidWord out(strands_);
  out.letters_ = free_reduce(letters_);
  return out;
}

long BraidWord::exponent_sum() const {
  long total = 0;
  for (int letter : letters_) total += letter > 0 ? 1 : -1;
  return total;
}

BraidWord BraidWord::slice(std::size_t first, std::size_t last) const {
  BraidWord out(strands_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                      letters_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b, "compose");
  return BraidWord(a.strands(), free_concat(a.letters(), b.letters()));
}

BraidWord compose(std::initializer_list<BraidWord> parts) {
  if (parts.size() == 0) throw DomainError("compose: empty product");
  BraidWord out = parts.begin()->reduced();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) out = compose(out, *it);
  return out;
}

BraidWord concat_raw(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b, "concat");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& a) {
  return BraidWord(a.strands(), free_invert(a.letters()));
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b, "commutator");
  return compose({a, b, invert(a), invert(b)});
}

BraidWord power(const BraidWord& a, int e) {
  BraidWord base = e >= 0 ? a : invert(a);
  BraidWord out(a.strands());
  for (int n = std::abs(e); n > 0; --n) out = compose(out, base);
  return out;
}

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= size(); ++p)
    if ((*this)(p) != p) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = (*this)(p)) {
      seen[static_cast<std::size_t>(p)] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cycle[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("permutation size mismatch");
  std::vector<int> images(images_.size());
  for (int p = 1; p <= size(); ++p) images[static_cast<std::size_t>(p - 1)] = other((*this)(p));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int p = 1; p <= size(); ++p) images[static_cast<std::size_t>((*this)(p) - 1)] = p;
  return Permutation(std::move(images));
}

Permutation permutation(const BraidWord& a) {
  // at[pos] = starting label of the strand currently at pos
  const int k = a.strands();
  std::vector<int> at(static_cast<std::size_t>(k));
  std::iota(at.begin(), at.end(), 1);
  for (int letter : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter));
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int pos = 1; pos <= k; ++pos) images[static_cast<std::size_t>(at[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
  return Permutation(std::move(images));
}

bool is_pure(const BraidWord& a) { return permutation(a).is_identity(); }

std::vector<std::pair<int, int>> crossing_strands(const BraidWord& a) {
  const int k = a.strands();
  std::vector<int> at(static_cast<std::size_t>(k));
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size());
  for (int letter : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter));
    out.emplace_back(at[i - 1], at[i]);
    std::swap(at[i - 1], at[i]);
  }
  return out;
}

BraidWord pure_gen(PureGenSpec spec, int strands) {
  if (spec.i < 1 || spec.i >= spec.j || spec.j > strands)
    throw DomainError("pure generator p_{" + std::to_string(spec.i) + "," + std::to_string(spec.j) +
                      "} out of range for B" + std::to_string(strands));
  std::vector<int> letters;
  for (int g = spec.j - 1; g > spec.i; --g) letters.push_back(g);
  letters.push_back(spec.i);
  letters.push_back(spec.i);
  for (int g = spec.i + 1; g < spec.j; ++g) letters.push_back(-g);
  return BraidWord(strands, std::move(letters));
}

BraidWord pure_gen(int i, int j, int strands) { return pure_gen(PureGenSpec{i, j}, strands); }

BraidWord shift_braid(int strands) {
  if (strands < 1) throw DomainError("shift_braid: k must be positive");
  std::vector<int> letters;
  for (int g = strands - 1; g >= 1; --g) letters.push_back(-g);
  return BraidWord(strands, std::move(letters));
}

BraidWord conjugate_shift(const BraidWord& p, int m) {
  if (!is_pure(p)) throw DomainError("conjugate_shift: input is not a pure braid");
  const BraidWord t = shift_braid(p.strands());
  return compose({power(t, -m), p, power(t, m)});
}

BraidWord embed(const BraidWord& a, int strands) {
  if (strands < a.strands()) throw DomainError("embed: target has fewer strands");
  return BraidWord(strands, a.letters());
}

BraidWord braid_connected_sum(const BraidWord& p, const BraidWord& q) {
  if (p.strands() != q.strands()) throw DomainError("braid_connected_sum: strand count mismatch");
  if (!is_pure(p) || !is_pure(q)) throw DomainError("braid_connected_sum: inputs must be pure");
  const int k = p.strands();
  return compose(embed(p, 2 * k), conjugate_shift(embed(q, 2 * k), k));
}

bool braid_eq(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b, "braid_eq");
  return garside_normal_form(a) == garside_normal_form(b);
}

}  // namespace deltaft
