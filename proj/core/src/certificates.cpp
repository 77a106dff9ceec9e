#include "scltwist/certificates.hpp"

namespace scltwist {

namespace {

Word twist_generator(const std::string& curve) { return Word::generator(generator_name(TwistSymbol::twist(curve))); }

TwistWord factor_word(const CommutatorFactor& f) {
  const TwistWord c = from_free_word(f.conjugator);
  const TwistWord l = from_free_word(f.left);
  const TwistWord r = from_free_word(f.right);
  return c * l * r * l.inverse() * r.inverse() * c.inverse();
}

/// Literal product of the factors, one commutator after another.
TwistWord expression_word(const CommutatorExpression& e) {
  TwistWord out;
  for (const CommutatorFactor& f : e.factors) {
    out = out * factor_word(f);
  }
  return out;
}

class ScriptBuilder {
 public:
  ScriptBuilder(const CurveConfiguration& config, std::vector<MappingSymbol> mappings, TwistWord source)
      : config_(config) {
    script_.mappings = std::move(mappings);
    script_.source = std::move(source);
    table_ = script_.mapping_table();
    word_ = script_.source;
  }

  ScriptBuilder& step(Move move) {
    const MoveContext ctx{config_, table_, &script_.source};
    word_ = apply_move(word_, move, ctx);
    script_.steps.push_back(std::move(move));
    return *this;
  }

  ScriptBuilder& insert(std::size_t at, TwistLetter s) {
    return step({MoveKind::free_insert, at, Direction::none, s, std::nullopt});
  }
  ScriptBuilder& simple(MoveKind kind, std::size_t at) { return step({kind, at, Direction::none, {}, {}}); }
  ScriptBuilder& commute(std::size_t at) { return simple(MoveKind::commute, at); }
  ScriptBuilder& braid(std::size_t at) { return simple(MoveKind::braid, at); }
  ScriptBuilder& natural_fold(std::size_t at) {
    return step({MoveKind::twist_naturality, at, Direction::fold, {}, {}});
  }
  ScriptBuilder& unfold_definition(std::size_t at) {
    return step({MoveKind::definition_substitute, at, Direction::unfold, {}, {}});
  }

  /// Free-cancels adjacent inverse pairs, leftmost first, until none remain.
  ScriptBuilder& cancel_all() {
    for (;;) {
      const auto& l = word_.letters();
      std::size_t i = 0;
      while (i + 1 < l.size() && l[i + 1] != l[i].inverse()) {
        ++i;
      }
      if (i + 1 >= l.size()) {
        return *this;
      }
      simple(MoveKind::free_cancel, i);
    }
  }

  ProofScript finish() {
    script_.claim = word_;
    return std::move(script_);
  }

 private:
  const CurveConfiguration& config_;
  ProofScript script_;
  std::map<std::string, MappingSymbol> table_;
  TwistWord word_;
};

}  // namespace

TwistCertificate lemma5_commutator(const std::string& a, const std::string& b, const std::string& c,
                                   const std::string& d, const MappingSymbol& g) {
  if (g.image_of(a) != d || g.image_of(b) != c) {
    throw Error("mapping-mismatch", "'" + g.name() + "' must send " + a + " -> " + d + " and " + b + " -> " + c);
  }
  const Word ta = twist_generator(a);
  const Word tb = twist_generator(b);
  const Word tc = twist_generator(c);
  const Word td = twist_generator(d);
  const Word gw = Word::generator(g.name());

  TwistCertificate cert;
  cert.expression.factors.push_back({Word(), ta * tb.inverse(), gw});
  cert.expression.target = ta * tb.inverse() * tc * td.inverse();
  cert.mappings = {g};

  // t_a t_b^-1 g t_b t_a^-1 g^-1 -> t_a t_b^-1 (g t_b g^-1)(g t_a^-1 g^-1)
  // without citing any relation of the surface.
  const CurveConfiguration bare({a, b, c, d}, {}, {}, {}, {});
  ScriptBuilder s(bare, cert.mappings, expression_word(cert.expression));
  s.insert(4, mapping_letter(g.name(), -1)).natural_fold(2).natural_fold(3);
  cert.derivation = s.finish();
  return cert;
}

TwistCertificate theorem3_certificate() {
  const MappingSymbol g("g", {{"a4", "a1"}, {"alpha", "a5"}});
  const MappingSymbol h("h", {{"a1", "a2"}, {"a2", "beta"}});
  const Word t1 = twist_generator("a1");
  const Word t2 = twist_generator("a2");
  const Word t4 = twist_generator("a4");
  const Word ta = twist_generator("alpha");

  TwistCertificate cert;
  cert.expression.factors.push_back({t2.power(4), Word::generator("h"), t1 * t2.inverse()});
  cert.expression.factors.push_back({Word(), t4 * ta.inverse(), Word::generator("g")});
  cert.expression.target = t2.power(10);
  cert.mappings = {g, h};

  const CurveConfiguration config = CurveConfiguration::standard();
  ScriptBuilder s(config, cert.mappings, expression_word(cert.expression));
  // t2^4 h t1 t2^-1 h^-1 t2 t1^-1 t2^-4 t4 t_alpha^-1 g t_alpha t4^-1 g^-1
  s.insert(6, mapping_letter("h", -1)).natural_fold(4).natural_fold(5);
  // t2^5 t_beta^-1 t2 t1^-1 t2^-4 t4 t_alpha^-1 g t_alpha t4^-1 g^-1
  s.insert(16, mapping_letter("g", -1)).natural_fold(14).natural_fold(15);
  // t2^5 t_beta^-1 t2 t1^-1 t2^-4 t4 t_alpha^-1 t5 t1^-1
  s.unfold_definition(13);
  for (std::size_t i = 12; i < 17; ++i) {
    s.commute(i);
  }
  s.commute(18).commute(17);
  // ... t2^2 t3^-1 t2^-2 t1^-1 t4 t5
  s.insert(18, twist_letter("a2", -1)).commute(19).commute(20);
  // ... t1^-1 t2^-1 t4 t5 t2; expand t4 t5 as in the shipped script
  s.simple(MoveKind::chain_substitute, 19).commute(21).commute(27);
  s.braid(19).braid(22).braid(25).braid(28);
  s.cancel_all();
  // t2^5 t_beta^-1 t2^3 t3 t2^2
  s.unfold_definition(5).cancel_all();
  cert.derivation = s.finish();
  return cert;
}

DerivationReport certify(const TwistCertificate& certificate, const CurveConfiguration& config) {
  const ProofScript& script = certificate.derivation;
  if (to_free_word(script.source) != certificate.expression.value()) {
    DerivationReport report;
    report.words.push_back(script.source);
    report.failure = DerivationFailure{0, "certificate-mismatch",
                                       "derivation source is not the product of the factors"};
    return report;
  }
  if (to_free_word(script.claim) != certificate.expression.target) {
    DerivationReport report;
    report.words.push_back(script.source);
    report.failure = DerivationFailure{script.steps.size(), "certificate-mismatch",
                                       "derivation claim is not the target"};
    return report;
  }
  return check_script(script, config);
}

}  // namespace scltwist
