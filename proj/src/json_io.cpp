#include "deltaft/json_io.hpp"

#include "deltaft/error.hpp"

namespace deltaft {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long get_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& get_array(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return v;
}

BraidWord get_braid(const Json& j, const char* key) { return BraidWord::parse(get_string(j, key)); }

/// A braid in B_strands; "B1" style identities from other groups are allowed
/// for empty words.
BraidWord get_braid_in(const Json& j, const char* key, int strands) {
  const BraidWord w = get_braid(j, key);
  if (w.empty()) return BraidWord(strands);
  if (w.strands() != strands)
    throw ParseError(std::string("field \"") + key + "\" must be a word in B" + std::to_string(strands));
  return w;
}

int get_strands(const Json& j) {
  const long k = get_int(j, "k");
  if (k < 1 || k > 256) throw ParseError("field \"k\" out of range");
  return static_cast<int>(k);
}

Json braid_list(const std::vector<BraidWord>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

std::vector<BraidWord> braid_list_from(const Json& j, const char* key, int strands) {
  std::vector<BraidWord> out;
  for (const auto& item : get_array(j, key)) {
    if (!item.is_string()) throw ParseError(std::string("entries of \"") + key + "\" must be braid strings");
    BraidWord w = BraidWord::parse(item.get<std::string>());
    out.push_back(w.empty() ? BraidWord(strands) : w);
    if (out.back().strands() != strands)
      throw ParseError(std::string("entries of \"") + key + "\" must be words in B" + std::to_string(strands));
  }
  return out;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational values must be strings like \"-3/2\"");
  try {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + j.get<std::string>());
  }
}

Json to_json(const CombedForm& form) {
  Json layers = Json::array();
  for (std::size_t pos = 0; pos < form.layers.size(); ++pos) {
    const int j = form.layer_index(pos);
    Json layer = Json::array();
    for (int l : form.layers[pos]) layer.push_back({{"i", std::abs(l)}, {"j", j}, {"sign", l > 0 ? 1 : -1}});
    layers.push_back(std::move(layer));
  }
  return {{"k", form.strands}, {"layers", std::move(layers)}};
}

CombedForm combed_form_from_json(const Json& j) {
  CombedForm form;
  form.strands = get_strands(j);
  const Json& layers = get_array(j, "layers");
  if (layers.size() != static_cast<std::size_t>(std::max(form.strands - 1, 0)))
    throw ParseError("a combed form on k strands has k - 1 layers");
  for (std::size_t pos = 0; pos < layers.size(); ++pos) {
    const int layer_j = form.layer_index(pos);
    if (!layers[pos].is_array()) throw ParseError("each layer must be an array");
    FreeWord word;
    for (const auto& letter : layers[pos]) {
      const long i = get_int(letter, "i"), jj = get_int(letter, "j"), sign = get_int(letter, "sign");
      if (jj != layer_j || i < 1 || i >= layer_j || (sign != 1 && sign != -1))
        throw ParseError("bad letter in layer " + std::to_string(layer_j));
      word.push_back(static_cast<int>(sign * i));
    }
    form.layers.push_back(std::move(word));
  }
  return form;
}

Json to_json(const DeltaInsertion& move) {
  Json out = {{"pos", move.position}, {"h", move.h}, {"i", move.i}, {"j", move.j}, {"sign", move.sign}};
  return out;
}

DeltaInsertion delta_insertion_from_json(const Json& j, int strands) {
  DeltaInsertion m;
  const long pos = get_int(j, "pos");
  if (pos < 0) throw ParseError("insertion position must be nonnegative");
  m.position = static_cast<std::size_t>(pos);
  m.h = static_cast<int>(get_int(j, "h"));
  m.i = static_cast<int>(get_int(j, "i"));
  m.j = static_cast<int>(get_int(j, "j"));
  m.sign = static_cast<int>(get_int(j, "sign"));
  if (j.contains("conj")) m.conjugator = get_braid_in(j, "conj", strands).letters();
  return m;
}

namespace {

Json move_to_json(const DeltaInsertion& move, int strands) {
  Json out = to_json(move);
  if (!move.conjugator.empty()) out["conj"] = BraidWord(strands, move.conjugator).to_string();
  return out;
}

Json moves_to_json(const std::vector<DeltaInsertion>& moves, int strands) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back(move_to_json(m, strands));
  return out;
}

std::vector<DeltaInsertion> moves_from_json(const Json& arr, int strands) {
  if (!arr.is_array()) throw ParseError("moves must be an array");
  std::vector<DeltaInsertion> out;
  for (const auto& m : arr) out.push_back(delta_insertion_from_json(m, strands));
  return out;
}

}  // namespace

Json to_json(const DeltaScript& script) {
  const int k = script.base.strands();
  return {{"base", script.base.to_string()},
          {"moves", moves_to_json(script.moves, k)},
          {"target", script.target.to_string()}};
}

DeltaScript delta_script_from_json(const Json& j) {
  DeltaScript s;
  s.base = get_braid(j, "base");
  s.moves = moves_from_json(get_array(j, "moves"), s.base.strands());
  s.target = get_braid_in(j, "target", s.base.strands());
  return s;
}

Json to_json(const MarkedBraid& marked) {
  const int k = marked.base.strands();
  Json sets = Json::array();
  for (const auto& set : marked.site_sets) sets.push_back(moves_to_json(set, k));
  return {{"base", marked.base.to_string()},
          {"closer", BraidWord(k, marked.closer.letters()).to_string()},
          {"site_sets", std::move(sets)}};
}

MarkedBraid marked_braid_from_json(const Json& j) {
  MarkedBraid m;
  m.base = get_braid(j, "base");
  const int k = m.base.strands();
  m.closer = j.contains("closer") ? get_braid_in(j, "closer", k) : BraidWord(k);
  for (const auto& set : get_array(j, "site_sets")) m.site_sets.push_back(moves_from_json(set, k));
  return m;
}

Json to_json(const AltSumReport& report) {
  Json subsets = Json::array();
  for (const auto& e : report.entries) {
    Json members = Json::array();
    for (int s = 0; s < report.n; ++s)
      if (e.mask >> s & 1U) members.push_back(s + 1);
    subsets.push_back({{"T", std::move(members)}, {"values", rational_list(e.values)}});
  }
  return {{"n", report.n},
          {"invariant", report.invariant},
          {"subsets", std::move(subsets)},
          {"total", rational_list(report.total)},
          {"vanishes", report.vanishes()}};
}

Json polynomial_to_json(const LaurentPoly& p, const std::string& var, int unit) {
  bool half = false;
  for (const auto& [e, c] : p.terms())
    if (unit == 2 && e % 2 != 0) half = true;
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({half || unit == 1 ? e : e / 2, c.get_str()}));
  return {{"var", var}, {"halfPowers", half}, {"terms", std::move(terms)}};
}

Json to_json(const SeriesExpansion& s) { return {{"dmax", s.order}, {"u", rational_list(s.coefficients)}}; }

namespace {

Json spec_pair(const PureGenSpec& s) { return Json::array({s.i, s.j}); }

PureGenSpec spec_from(const Json& j, int strands) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("pure generator must be [i, j]");
  PureGenSpec s{j[0].get<int>(), j[1].get<int>()};
  if (!(1 <= s.i && s.i < s.j && s.j <= strands)) throw ParseError("pure generator indices out of range");
  return s;
}

Json generators_to_json(const std::vector<CommutatorGenerator>& gens, int strands) {
  Json out = Json::array();
  for (const auto& g : gens)
    out.push_back({{"conj", BraidWord(strands, g.conjugator.letters()).to_string()},
                   {"left", spec_pair(g.left)},
                   {"right", spec_pair(g.right)}});
  return out;
}

std::vector<CommutatorGenerator> generators_from(const Json& j, int strands) {
  std::vector<CommutatorGenerator> out;
  if (!j.contains("generators")) return out;
  for (const auto& g : get_array(j, "generators"))
    out.push_back({get_braid_in(g, "conj", strands), spec_from(field(g, "left"), strands),
                   spec_from(field(g, "right"), strands)});
  return out;
}

Json gamma_node_to_json(const GammaNode& node, int k) {
  switch (node.kind) {
    case GammaNode::Kind::Leaf: {
      Json out = {{"leaf", BraidWord(k, node.word.letters()).to_string()}};
      if (!node.generators.empty()) out["generators"] = generators_to_json(node.generators, k);
      return out;
    }
    case GammaNode::Kind::Commutator:
      return {{"comm", Json::array({gamma_node_to_json(node.children[0], k), gamma_node_to_json(node.children[1], k)})}};
    case GammaNode::Kind::Product: {
      Json factors = Json::array();
      for (const auto& c : node.children) factors.push_back(gamma_node_to_json(c, k));
      return {{"prod", std::move(factors)}};
    }
    case GammaNode::Kind::Conjugate:
      return {{"conj", BraidWord(k, node.word.letters()).to_string()},
              {"of", gamma_node_to_json(node.children[0], k)}};
  }
  throw DomainError("certificate: unknown node kind");
}

GammaNode gamma_node_from_json(const Json& j, int k, int depth) {
  if (depth > 64) throw ParseError("certificate nested too deeply");
  if (!j.is_object()) throw ParseError("certificate nodes must be objects");
  if (j.contains("leaf")) return GammaNode::leaf(get_braid_in(j, "leaf", k), generators_from(j, k));
  if (j.contains("comm")) {
    const Json& pair = get_array(j, "comm");
    if (pair.size() != 2) throw ParseError("\"comm\" needs exactly two nodes");
    return GammaNode::commutator(gamma_node_from_json(pair[0], k, depth + 1), gamma_node_from_json(pair[1], k, depth + 1));
  }
  if (j.contains("prod")) {
    std::vector<GammaNode> factors;
    for (const auto& f : get_array(j, "prod")) factors.push_back(gamma_node_from_json(f, k, depth + 1));
    if (factors.empty()) throw ParseError("\"prod\" needs at least one node");
    return GammaNode::product(std::move(factors));
  }
  if (j.contains("conj")) return GammaNode::conjugate(get_braid_in(j, "conj", k), gamma_node_from_json(field(j, "of"), k, depth + 1));
  throw ParseError("certificate node must have one of leaf, comm, prod, conj");
}

Json derived_node_to_json(const DerivedNode& node, int k) {
  if (node.is_leaf()) {
    Json out = {{"leaf", BraidWord(k, node.leaf.letters()).to_string()}};
    if (!node.generators.empty()) out["generators"] = generators_to_json(node.generators, k);
    return out;
  }
  return {{"comm", Json::array({derived_node_to_json(node.children[0], k), derived_node_to_json(node.children[1], k)})}};
}

DerivedNode derived_node_from_json(const Json& j, int k, int depth) {
  if (depth > 64) throw ParseError("certificate nested too deeply");
  DerivedNode node;
  if (j.is_object() && j.contains("leaf")) {
    node.leaf = get_braid_in(j, "leaf", k);
    node.generators = generators_from(j, k);
    return node;
  }
  const Json& pair = get_array(j, "comm");
  if (pair.size() != 2) throw ParseError("\"comm\" needs exactly two nodes");
  node.children.push_back(derived_node_from_json(pair[0], k, depth + 1));
  node.children.push_back(derived_node_from_json(pair[1], k, depth + 1));
  return node;
}

int get_level(const Json& j) {
  const long level = get_int(j, "level");
  if (level < 1 || level > 64) throw ParseError("field \"level\" out of range");
  return static_cast<int>(level);
}

}  // namespace

Json to_json(const GammaCertificate& cert) {
  return {{"kind", "gamma"},
          {"k", cert.strands},
          {"level", cert.level},
          {"word", evaluate(cert).to_string()},
          {"tree", gamma_node_to_json(cert.root, cert.strands)}};
}

GammaCertificate gamma_certificate_from_json(const Json& j) {
  if (j.contains("kind") && get_string(j, "kind") != "gamma") throw ParseError("expected a gamma certificate");
  GammaCertificate cert;
  cert.strands = get_strands(j);
  cert.level = get_level(j);
  cert.root = gamma_node_from_json(field(j, "tree"), cert.strands, 0);
  return cert;
}

Json to_json(const DerivedCertificate& cert) {
  return {{"kind", "derived"},
          {"k", cert.strands},
          {"level", cert.level},
          {"word", evaluate(cert).to_string()},
          {"tree", derived_node_to_json(cert.root, cert.strands)}};
}

DerivedCertificate derived_certificate_from_json(const Json& j) {
  if (get_string(j, "kind") != "derived") throw ParseError("expected a derived certificate");
  DerivedCertificate cert;
  cert.strands = get_strands(j);
  cert.level = get_level(j);
  cert.root = derived_node_from_json(field(j, "tree"), cert.strands, 0);
  return cert;
}

Json to_json(const IdealProduct& ip) {
  return {{"k", ip.strands}, {"xs", braid_list(ip.xs)}, {"y", BraidWord(ip.strands, ip.y.letters()).to_string()}};
}

IdealProduct ideal_product_from_json(const Json& j) {
  IdealProduct ip;
  ip.strands = get_strands(j);
  ip.xs = braid_list_from(j, "xs", ip.strands);
  ip.y = get_braid_in(j, "y", ip.strands);
  return ip;
}

Json to_json(const std::vector<SignedTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json members = Json::array();
    for (int s = 0; s < 64; ++s)
      if (t.mask >> s & 1U) members.push_back(s + 1);
    out.push_back({{"sign", t.sign}, {"T", std::move(members)}, {"word", t.word.to_string()}});
  }
  return out;
}

Json to_json(const SlideState& s) {
  const int big = 2 * s.k;
  return {{"k", s.k},
          {"m", s.m},
          {"xs", braid_list(s.xs)},
          {"z", BraidWord(big, s.z.letters()).to_string()},
          {"y", BraidWord(s.k, s.y.letters()).to_string()}};
}

SlideState slide_state_from_json(const Json& j) {
  SlideState s;
  s.k = get_strands(j);
  if (s.k > 128) throw ParseError("field \"k\" out of range");
  const long m = get_int(j, "m");
  if (m < 0 || m > s.k) throw ParseError("field \"m\" must lie in 0..k");
  s.m = static_cast<int>(m);
  s.xs = braid_list_from(j, "xs", 2 * s.k);
  s.z = get_braid_in(j, "z", 2 * s.k);
  s.y = get_braid_in(j, "y", s.k);
  return s;
}

Json to_json(const TheoremReport& report) {
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json trial = {{"seed", std::to_string(t.seed)},
                  {"p_cert", to_json(t.p_cert)},
                  {"b", t.b.to_string()},
                  {"coeffs_base", rational_list(t.coeffs_base)},
                  {"coeffs_mod", rational_list(t.coeffs_mod)},
                  {"a2_base", t.a2_base.get_str()},
                  {"a2_mod", t.a2_mod.get_str()},
                  {"a2_checked", t.a2_checked},
                  {"agree", t.agree}};
    if (!t.note.empty()) trial["note"] = t.note;
    trials.push_back(std::move(trial));
  }
  return {{"theorem", "2.1AC"},
          {"n", report.n},
          {"k", report.k},
          {"seed", std::to_string(report.seed)},
          {"trials", std::move(trials)},
          {"pass", report.pass}};
}

}  // namespace deltaft
