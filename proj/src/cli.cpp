#include "deltaft/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "deltaft/braid.hpp"
#include "deltaft/certificate.hpp"
#include "deltaft/combing.hpp"
#include "deltaft/delta.hpp"
#include "deltaft/error.hpp"
#include "deltaft/invariants.hpp"
#include "deltaft/json_io.hpp"
#include "deltaft/lab.hpp"

namespace deltaft {

namespace {

struct Output {
  bool json = false;
  std::string text;
  Json payload;
  int exit_code = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_file(path)); }

std::string matrix_text(const std::vector<std::vector<long>>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? ", " : "") + std::to_string(m[r][c]);
    out += "]";
  }
  return out + "]";
}

std::string rational_list_text(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t d = 0; d < v.size(); ++d) out += (d ? ", " : "") + v[d].get_str();
  return out + "]";
}

/// Parses "name:n" (n optional when allowed).
std::pair<std::string, int> class_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, 1};
  try {
    std::size_t used = 0;
    const int n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
    return {spec.substr(0, colon), n};
  } catch (const std::exception&) {
    throw ParseError("bad class " + spec);
  }
}

std::uint64_t parse_subset(const std::string& text, int n) {
  std::uint64_t mask = 0;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad subset " + text);
    }
    if (v < 1 || v > n) throw DomainError("subset member " + item + " out of range 1.." + std::to_string(n));
    mask |= std::uint64_t{1} << (v - 1);
  }
  return mask;
}

class Cli {
 public:
  Cli() : app_("Delta finite-type braid toolkit", "deltaft") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", out_.json, "Emit JSON instead of text");
    build_braid();
    build_invariant();
    build_delta();
    build_lab();
  }

  CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
      action_();
    } catch (const CLI::CallForHelp&) {
      result.out = app_.help();
      return result;
    } catch (const CLI::CallForAllHelp&) {
      result.out = app_.help("", CLI::AppFormatMode::All);
      return result;
    } catch (const CLI::ParseError& e) {
      result.exit_code = 2;
      result.err = std::string(e.what()) + "\n";
      return result;
    } catch (const ParseError& e) {
      result.exit_code = 2;
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    } catch (const DomainError& e) {
      result.exit_code = 1;
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    } catch (const std::exception& e) {
      result.exit_code = 1;
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    }
    result.exit_code = out_.exit_code;
    result.err = notes_;
    if (out_.json || out_.text.empty())
      result.out = out_.payload.dump(2) + "\n";
    else
      result.out = out_.text + "\n";
    return result;
  }

 private:
  /// Records the subcommand body; it runs after parsing succeeds.
  void on(CLI::App* cmd, std::function<void()> body) {
    cmd->callback([this, body = std::move(body)] { action_ = body; });
  }

  void emit(std::string text, Json payload) {
    out_.text = std::move(text);
    out_.payload = std::move(payload);
  }

  /// JSON-only payloads.
  void emit(Json payload) { emit(std::string(), std::move(payload)); }

  void build_braid() {
    auto* braid = app_.add_subcommand("braid", "Braid words, permutations, closures");
    braid->require_subcommand(1);

    auto* eq = braid->add_subcommand("eq", "Decide whether two words are equal braids");
    eq->add_option("a", word_a_)->required();
    eq->add_option("b", word_b_)->required();
    on(eq, [this] {
      const bool equal = braid_eq(BraidWord::parse(word_a_), BraidWord::parse(word_b_));
      emit(equal ? "true" : "false", {{"equal", equal}});
    });

    auto* comb_cmd = braid->add_subcommand("comb", "Artin combing of a pure braid");
    comb_cmd->add_option("word", word_a_)->required();
    on(comb_cmd, [this] { emit(to_json(comb(BraidWord::parse(word_a_)))); });

    auto* perm = braid->add_subcommand("perm", "Permutation in cycle notation");
    perm->add_option("word", word_a_)->required();
    on(perm, [this] {
      const Permutation p = permutation(BraidWord::parse(word_a_));
      emit(p.cycle_notation(), {{"images", p.images()}, {"cycles", p.cycle_notation()}, {"pure", p.is_identity()}});
    });

    auto* info = braid->add_subcommand("closure-info", "Components, linking matrix and writhe of the closure");
    info->add_option("word", word_a_)->required();
    on(info, [this] {
      const BraidWord w = BraidWord::parse(word_a_);
      const ClosureComponents c = closure_components(w);
      const LinkingMatrix lk = linking_matrix(w);
      std::string text = "components: " + std::to_string(c.count) + "\nlinking: " + matrix_text(lk.entries) +
                         "\nwrithe: " + std::to_string(w.exponent_sum());
      emit(text, {{"components", c.count},
                  {"component_of", c.component_of},
                  {"linking", lk.entries},
                  {"writhe", w.exponent_sum()}});
    });

    auto* puregen = braid->add_subcommand("puregen", "The standard generator p_{i,j}");
    puregen->add_option("i", int_a_)->required();
    puregen->add_option("j", int_b_)->required();
    puregen->add_option("--strands,-k", strands_, "Strand count (default j)");
    on(puregen, [this] {
      const int k = strands_ > 0 ? strands_ : int_b_;
      if (!(1 <= int_a_ && int_a_ < int_b_ && int_b_ <= k)) throw DomainError("need 1 <= i < j <= k");
      emit_word(pure_gen(int_a_, int_b_, k));
    });

    auto* shift = braid->add_subcommand("shift", "The shift braid t_k");
    shift->add_option("k", int_a_)->required();
    on(shift, [this] {
      if (int_a_ < 1) throw DomainError("k must be positive");
      emit_word(shift_braid(int_a_));
    });

    auto* conjshift = braid->add_subcommand("conjshift", "t_k^-m p t_k^m for a pure braid p");
    conjshift->add_option("word", word_a_)->required();
    conjshift->add_option("--m", int_a_, "Shift count")->required();
    on(conjshift, [this] { emit_word(conjugate_shift(BraidWord::parse(word_a_), int_a_)); });

    auto* consum = braid->add_subcommand("consum", "Braid of the connected sum of closure(p t_k) and closure(q t_k)");
    consum->add_option("p", word_a_)->required();
    consum->add_option("q", word_b_)->required();
    on(consum, [this] { emit_word(braid_connected_sum(BraidWord::parse(word_a_), BraidWord::parse(word_b_))); });
  }

  void emit_word(const BraidWord& w) { emit(w.to_string(), {{"word", w.to_string()}}); }

  void build_invariant() {
    auto* inv = app_.add_subcommand("invariant", "Polynomial invariants of closures");
    inv->require_subcommand(1);

    auto* jones_cmd = inv->add_subcommand("jones", "Jones polynomial in t");
    jones_cmd->add_option("word", word_a_)->required();
    on(jones_cmd, [this] {
      const LaurentPoly v = jones(BraidWord::parse(word_a_));
      emit(v.to_string("t", 2), polynomial_to_json(v, "t", 2));
    });

    auto* bracket = inv->add_subcommand("bracket", "Kauffman bracket in A");
    bracket->add_option("word", word_a_)->required();
    on(bracket, [this] {
      const LaurentPoly b = kauffman_bracket(BraidWord::parse(word_a_));
      emit(b.to_string("A"), polynomial_to_json(b, "A"));
    });

    auto* series = inv->add_subcommand("series", "Coefficients u_0 ... u_dmax of V(e^x)");
    series->add_option("word", word_a_)->required();
    series->add_option("--dmax", int_a_, "Highest order")->required();
    on(series, [this] {
      const SeriesExpansion s = jones_series(BraidWord::parse(word_a_), int_a_);
      emit("u = " + rational_list_text(s.coefficients), to_json(s));
    });

    auto* alex = inv->add_subcommand("alexander", "Normalized Alexander polynomial");
    alex->add_option("word", word_a_)->required();
    on(alex, [this] {
      const LaurentPoly a = alexander(BraidWord::parse(word_a_));
      emit(a.to_string("t"), polynomial_to_json(a, "t"));
    });

    auto* a2 = inv->add_subcommand("a2", "Second Conway coefficient");
    a2->add_option("word", word_a_)->required();
    on(a2, [this] {
      const Integer v = conway_a2(BraidWord::parse(word_a_));
      emit(v.get_str(), {{"a2", v.get_str()}});
    });
  }

  void build_delta() {
    auto* delta = app_.add_subcommand("delta", "Delta moves, marked braids and alternating sums");
    delta->require_subcommand(1);

    auto* triv = delta->add_subcommand("trivialize", "Delta script building a P' braid from the identity");
    triv->add_option("word", word_a_)->required();
    on(triv, [this] { emit(to_json(delta_trivialize(BraidWord::parse(word_a_)))); });

    auto* witness = delta->add_subcommand("witness", "Marked braid witnessing a gamma_n(P') element");
    witness->add_option("--n", int_a_, "Level")->default_val(1);
    witness->add_option("--seed", seed_, "Sampler seed")->default_val(0);
    witness->add_option("--strands,-k", strands_, "Strand count")->default_val(3);
    witness->add_option("--size", size_, "Factors in the sampled product")->default_val(1);
    witness->add_option("--cert", file_, "Use this certificate file instead of sampling");
    on(witness, [this] {
      const GammaCertificate cert = file_.empty() ? sample_gamma(int_a_, strands_, seed_, size_)
                                                  : gamma_certificate_from_json(read_json_file(file_));
      emit(to_json(delta_n_witness(cert)));
    });

    auto* altsum = delta->add_subcommand("altsum", "Alternating sum of an invariant over all subsets");
    altsum->add_option("file", file_, "MarkedBraid JSON")->required();
    altsum->add_option("--inv", inv_, "series:d, a2 or const")->required();
    on(altsum, [this] {
      const AltSumReport r = alt_sum(marked_braid_from_json(read_json_file(file_)), parse_invariant(inv_));
      emit(std::string(), to_json(r));
    });

    auto* apply = delta->add_subcommand("apply", "Apply a DeltaScript, or a subset of a MarkedBraid");
    apply->add_option("file", file_, "DeltaScript or MarkedBraid JSON")->required();
    apply->add_option("--subset", subset_, "Comma separated site-set numbers, e.g. 1,3");
    on(apply, [this] {
      const Json j = read_json_file(file_);
      if (j.contains("site_sets")) {
        const MarkedBraid m = marked_braid_from_json(j);
        const BraidWord w = m.subset_word(parse_subset(subset_, m.order()));
        const bool trivial = braid_eq(w, BraidWord(w.strands()));
        emit(w.to_string(), {{"word", w.to_string()}, {"identity", trivial}});
      } else {
        if (!subset_.empty()) throw ParseError("--subset applies to marked braids only");
        const DeltaScript s = delta_script_from_json(j);
        const BraidWord w = s.result();
        const bool matches = braid_eq(w, s.target);
        emit(w.to_string(), {{"word", w.to_string()}, {"matches_target", matches}});
      }
    });
  }

  void build_lab() {
    auto* lab = app_.add_subcommand("lab", "Certificates, ideal products, slides and theorem checks");
    lab->require_subcommand(1);

    auto* sample = lab->add_subcommand("sample", "Random certified sample");
    sample->add_option("--class", class_, "pprime, gamma:n, derived:n or ideal:n")->required();
    sample->add_option("--strands,-k", strands_, "Strand count")->default_val(3);
    sample->add_option("--seed", seed_, "Sampler seed")->default_val(0);
    sample->add_option("--size", size_, "Factors in the sampled product")->default_val(1);
    on(sample, [this] {
      const auto [name, n] = class_spec(class_);
      if (n < 0 || (n < 1 && name != "ideal")) throw DomainError("level must be positive");
      if (name == "pprime") {
        emit(to_json(sample_p_prime(strands_, seed_, size_)));
      } else if (name == "gamma") {
        if (strands_ == 2) notes_ += "note: P_2' is trivial, the sample is the identity\n";
        emit(to_json(sample_gamma(n, strands_, seed_, size_)));
      } else if (name == "derived") {
        emit(to_json(sample_derived(n, strands_, seed_)));
      } else if (name == "ideal") {
        emit(to_json(sample_ideal_product(n, strands_, seed_)));
      } else {
        throw ParseError("unknown class " + name);
      }
    });

    auto* expand = lab->add_subcommand("expand", "Signed terms of an ideal product");
    expand->add_option("file", file_, "IdealProduct JSON")->required();
    on(expand, [this] { emit(to_json(expand_ideal_product(ideal_product_from_json(read_json_file(file_))))); });

    auto* normalize = lab->add_subcommand("normalize", "Connected-sum normalization of an ideal product");
    normalize->add_option("file", file_, "IdealProduct JSON")->required();
    on(normalize, [this] { emit(to_json(connected_sum_normalize(ideal_product_from_json(read_json_file(file_))))); });

    auto* slide = lab->add_subcommand("slide", "Apply slide steps to a slide state");
    slide->add_option("file", file_, "SlideState JSON (an IdealProduct is normalized first)")->required();
    slide->add_option("--steps", int_a_, "Number of steps")->required();
    on(slide, [this] {
      const Json j = read_json_file(file_);
      SlideState s = j.contains("m") ? slide_state_from_json(j) : connected_sum_normalize(ideal_product_from_json(j));
      if (int_a_ < 0 || int_a_ > s.m) throw DomainError("--steps must lie in 0..m = " + std::to_string(s.m));
      for (int step = 0; step < int_a_; ++step) s = slide_step(s);
      Json out = to_json(s);
      if (s.m == 0) {
        const IdealProduct r = residual(s);
        out["residual"] = to_json(r);
        out["residual_in_p_prime"] = is_in_p_prime(r.y);
      }
      emit(std::move(out));
    });

    auto* verify = lab->add_subcommand("verify", "Desk checks of the theorem's constructive direction");
    verify->require_subcommand(1);
    auto* thm = verify->add_subcommand("thm21", "Series agreement between closure(b) and closure(p b)");
    thm->add_option("--n", int_a_, "Level")->default_val(1);
    thm->add_option("--trials", trials_, "Trial count")->default_val(25);
    thm->add_option("--seed", seed_, "Master seed")->default_val(0);
    thm->add_option("--strands,-k", strands_, "Strand count")->default_val(3);
    on(thm, [this] {
      const TheoremReport r = verify_theorem_2_1_AC(int_a_, strands_, seed_, trials_);
      if (!r.pass) {
        out_.exit_code = 1;
        notes_ += "error: invariant disagreement found; the report holds the reproduction data\n";
      }
      emit(to_json(r));
    });
  }

  CLI::App app_;
  Output out_;
  std::function<void()> action_ = [] {};
  std::string notes_;

  std::string word_a_, word_b_, file_, inv_, subset_, class_;
  int int_a_ = 0, int_b_ = 0, strands_ = 0, size_ = 1, trials_ = 25;
  std::uint64_t seed_ = 0;
};

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  Cli cli;
  return cli.run(args);
}

}  // namespace deltaft
