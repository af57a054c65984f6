#include "deltaft/delta.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "deltaft/combing.hpp"
#include "deltaft/error.hpp"
#include "deltaft/invariants.hpp"

namespace deltaft {

BraidWord DeltaInsertion::block(int strands) const {
  const BraidWord relator =
      power(commutator(pure_gen(h, i, strands), pure_gen(i, j, strands)), sign);
  if (conjugator.empty()) return relator;
  const BraidWord c(strands, conjugator);
  return compose({c, relator, invert(c)});
}

void validate_insertion(const DeltaInsertion& move, int strands, std::size_t base_length) {
  if (move.position > base_length)
    throw DomainError("delta insertion position " + std::to_string(move.position) + " out of range 0.." +
                      std::to_string(base_length));
  if (!(1 <= move.h && move.h < move.i && move.i < move.j && move.j <= strands))
    throw DomainError("delta insertion triple must satisfy 1 <= h < i < j <= " + std::to_string(strands));
  if (move.sign != 1 && move.sign != -1) throw DomainError("delta insertion sign must be +1 or -1");
  for (int l : move.conjugator)
    if (l == 0 || std::abs(l) >= strands) throw DomainError("delta insertion conjugator letter out of range");
}

BraidWord apply_insertions(const BraidWord& base, const std::vector<std::vector<DeltaInsertion>>& site_sets) {
  const int k = base.strands();
  const std::size_t length = base.size();
  // Insertions per position, each tagged with its set.
  std::map<std::size_t, std::vector<std::pair<std::size_t, const DeltaInsertion*>>> at;
  for (std::size_t s = 0; s < site_sets.size(); ++s) {
    for (const auto& move : site_sets[s]) {
      validate_insertion(move, k, length);
      auto& slot = at[move.position];
      if (!slot.empty() && slot.front().first != s)
        throw DomainError("overlapping splice conflict at position " + std::to_string(move.position));
      slot.emplace_back(s, &move);
    }
  }
  std::vector<int> out;
  out.reserve(length);
  auto it = at.begin();
  for (std::size_t pos = 0; pos <= length; ++pos) {
    if (it != at.end() && it->first == pos) {
      for (const auto& [set, move] : it->second) {
        const BraidWord b = move->block(k);
        out.insert(out.end(), b.letters().begin(), b.letters().end());
      }
      ++it;
    }
    if (pos < length) out.push_back(base.letters()[pos]);
  }
  return BraidWord(k, std::move(out)).reduced();
}

BraidWord apply_insertions(const BraidWord& base, const std::vector<DeltaInsertion>& moves) {
  return apply_insertions(base, std::vector<std::vector<DeltaInsertion>>{moves});
}

DeltaScript delta_trivialize(const BraidWord& w) {
  if (!is_pure(w) || !is_in_p_prime(w)) throw DomainError("delta_trivialize: input is not in P'");
  const int k = w.strands();
  DeltaScript script;
  script.base = BraidWord(k);
  script.target = w;
  if (k < 3) return script;
  const CombedForm form = comb(w);
  for (std::size_t pos = 0; pos < form.layers.size(); ++pos) {
    const int j = form.layer_index(pos);
    for (const auto& f : decompose_layer(form.layers[pos]).factors) {
      // [p_aj, p_bj] = (p_aj p_bj) [p_ab, p_bj]^-1 (p_aj p_bj)^-1
      const BraidWord shift = compose({expand_layer(f.conjugator, j, k), pure_gen(f.a, j, k), pure_gen(f.b, j, k)});
      DeltaInsertion move;
      move.h = f.a;
      move.i = f.b;
      move.j = j;
      move.sign = -f.sign;
      move.conjugator = shift.letters();
      script.moves.push_back(std::move(move));
    }
  }
  return script;
}

BraidWord MarkedBraid::subset_word(std::uint64_t mask) const {
  std::vector<std::vector<DeltaInsertion>> chosen;
  for (std::size_t s = 0; s < site_sets.size(); ++s)
    if (mask >> s & 1U) chosen.push_back(site_sets[s]);
  return apply_insertions(base, chosen);
}

BraidWord MarkedBraid::link_word(std::uint64_t mask) const {
  return compose(subset_word(mask), BraidWord(base.strands(), closer.letters()));
}

void validate(const MarkedBraid& marked) {
  if (marked.site_sets.size() > 20) throw DomainError("marked braid: too many site-sets");
  if (!marked.closer.empty() && marked.closer.strands() != marked.base.strands())
    throw DomainError("marked braid: closer strand count differs from base");
  // Applying every set at once checks ranges and cross-set conflicts.
  apply_insertions(marked.base, marked.site_sets);
}

namespace {

using SiteSets = std::vector<std::vector<DeltaInsertion>>;

struct Witness {
  BraidWord word;  // raw
  SiteSets sets;
};

void merge_down(SiteSets& sets, std::size_t count) {
  while (sets.size() > count) {
    auto& into = sets[count - 1];
    into.insert(into.end(), sets.back().begin(), sets.back().end());
    sets.pop_back();
  }
}

std::vector<DeltaInsertion> shifted(std::vector<DeltaInsertion> moves, std::size_t offset) {
  for (auto& m : moves) m.position += offset;
  return moves;
}

/// The same set for the inverse word of length `length`, placed at offset.
std::vector<DeltaInsertion> mirrored(const std::vector<DeltaInsertion>& moves, std::size_t length,
                                     std::size_t offset) {
  std::vector<DeltaInsertion> out(moves.rbegin(), moves.rend());
  for (auto& m : out) {
    m.position = offset + length - m.position;
    m.sign = -m.sign;
  }
  return out;
}

Witness witness_node(const GammaNode& node, int k) {
  switch (node.kind) {
    case GammaNode::Kind::Leaf: {
      Witness w{BraidWord(k, node.word.letters()), SiteSets(1)};
      if (w.word.empty()) return w;
      const DeltaScript script = delta_trivialize(w.word);
      // Splice x_1^-1 x^-1 x_1 after the first letter, keeping the site
      // strictly inside the leaf.
      const BraidWord first_inv = invert(w.word.slice(0, 1));
      for (auto it = script.moves.rbegin(); it != script.moves.rend(); ++it) {
        DeltaInsertion m = *it;
        m.position = 1;
        m.sign = -m.sign;
        m.conjugator = compose(first_inv, BraidWord(k, m.conjugator)).letters();
        w.sets[0].push_back(std::move(m));
      }
      return w;
    }
    case GammaNode::Kind::Commutator: {
      Witness p = witness_node(node.children.at(0), k);
      Witness q = witness_node(node.children.at(1), k);
      merge_down(q.sets, 1);
      const std::size_t lp = p.word.size(), lq = q.word.size();
      Witness out;
      out.word = concat_raw(concat_raw(p.word, q.word), concat_raw(invert(p.word), invert(q.word)));
      for (const auto& set : p.sets) {
        auto s = set;
        auto back = mirrored(set, lp, lp + lq);
        s.insert(s.end(), back.begin(), back.end());
        out.sets.push_back(std::move(s));
      }
      auto s = shifted(q.sets[0], lp);
      auto back = mirrored(q.sets[0], lq, 2 * lp + lq);
      s.insert(s.end(), back.begin(), back.end());
      out.sets.push_back(std::move(s));
      return out;
    }
    case GammaNode::Kind::Product: {
      const std::size_t level = static_cast<std::size_t>(certified_level(node));
      Witness out{BraidWord(k), SiteSets(level)};
      for (const auto& child : node.children) {
        Witness c = witness_node(child, k);
        merge_down(c.sets, level);
        for (std::size_t s = 0; s < level; ++s) {
          auto moved = shifted(c.sets[s], out.word.size());
          out.sets[s].insert(out.sets[s].end(), moved.begin(), moved.end());
        }
        out.word = concat_raw(out.word, c.word);
      }
      return out;
    }
    case GammaNode::Kind::Conjugate: {
      const BraidWord u(k, node.word.letters());
      Witness inner = witness_node(node.children.at(0), k);
      Witness out;
      out.word = concat_raw(concat_raw(u, inner.word), invert(u));
      for (const auto& set : inner.sets) out.sets.push_back(shifted(set, u.size()));
      return out;
    }
  }
  throw DomainError("certificate: unknown node kind");
}

}  // namespace

MarkedBraid delta_n_witness(const GammaCertificate& cert) {
  validate(cert);
  Witness w = witness_node(cert.root, cert.strands);
  merge_down(w.sets, static_cast<std::size_t>(cert.level));
  MarkedBraid out;
  out.base = std::move(w.word);
  out.closer = shift_braid(cert.strands);
  out.site_sets = std::move(w.sets);
  return out;
}

Invariant parse_invariant(const std::string& spec) {
  if (spec == "a2") {
    return {spec, [](const BraidWord& b) { return std::vector<Rational>{Rational(conway_a2(b))}; }};
  }
  if (spec == "const") {
    return {spec, [](const BraidWord&) { return std::vector<Rational>{Rational(1)}; }};
  }
  if (spec.rfind("series:", 0) == 0) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(spec.substr(7), &used);
      if (used != spec.size() - 7) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad invariant spec: " + spec);
    }
    if (d < 0) throw ParseError("bad invariant spec: " + spec);
    return {spec, [d](const BraidWord& b) { return jones_series(b, d).coefficients; }};
  }
  throw ParseError("unknown invariant: " + spec + " (expected series:d, a2 or const)");
}

std::vector<Rational> AltSumReport::recompute_total() const {
  std::vector<Rational> sum;
  for (const auto& e : entries) {
    if (sum.size() < e.values.size()) sum.resize(e.values.size());
    const bool odd = std::popcount(e.mask) % 2 == 1;
    for (std::size_t d = 0; d < e.values.size(); ++d) sum[d] += odd ? -e.values[d] : e.values[d];
  }
  return sum;
}

bool AltSumReport::vanishes() const {
  return std::all_of(total.begin(), total.end(), [](const Rational& r) { return r == 0; });
}

std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  for (int s = 0; s < 64; ++s) {
    if (!(mask >> s & 1U)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(s + 1);
  }
  return out + "}";
}

AltSumReport alt_sum(const MarkedBraid& marked, const Invariant& v) {
  validate(marked);
  AltSumReport report;
  report.n = marked.order();
  report.invariant = v.name;
  const std::uint64_t count = std::uint64_t{1} << report.n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    AltSumEntry entry{mask, {}};
    try {
      entry.values = v.evaluate(marked.link_word(mask));
    } catch (const std::exception& e) {
      throw DomainError("invariant " + v.name + " failed on subset " + subset_label(mask) + ": " + e.what());
    }
    report.entries.push_back(std::move(entry));
  }
  report.total = report.recompute_total();
  return report;
}

}  // namespace deltaft
