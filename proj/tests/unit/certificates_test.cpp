#include <gtest/gtest.h>

#include "scltwist/certificates.hpp"
#include "scltwist/errors.hpp"

using namespace scltwist;

namespace {

const CurveConfiguration kConfig = CurveConfiguration::standard();

std::string lemma5_error(const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                         const MappingSymbol& g) {
  try {
    lemma5_commutator(a, b, c, d, g);
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

TEST(SingleCommutator, ExamplesFromTheConfiguration) {
  const MappingSymbol g("g", {{"a4", "a1"}, {"alpha", "a5"}});
  const TwistCertificate cg = lemma5_commutator("a4", "alpha", "a5", "a1", g);
  ASSERT_EQ(cg.expression.factors.size(), 1u);
  EXPECT_EQ(from_free_word(cg.expression.factors[0].left).to_string(), "t4 t_alpha^-1");
  EXPECT_EQ(from_free_word(cg.expression.factors[0].right).to_string(), "g");
  EXPECT_EQ(from_free_word(cg.expression.target).to_string(), "t4 t_alpha^-1 t5 t1^-1");
  EXPECT_EQ(cg.derivation.steps.size(), 3u);
  EXPECT_TRUE(certify(cg, kConfig).accepted);

  const MappingSymbol h("h", {{"a1", "a2"}, {"a2", "beta"}});
  const TwistCertificate ch = lemma5_commutator("a1", "a2", "beta", "a2", h);
  EXPECT_EQ(from_free_word(ch.expression.factors[0].left).to_string(), "t1 t2^-1");
  EXPECT_EQ(from_free_word(ch.expression.target).to_string(), "t1 t2^-1 t_beta t2^-1");
  EXPECT_TRUE(certify(ch, kConfig).accepted);
}

TEST(SingleCommutator, MappingMismatch) {
  const MappingSymbol g("g", {{"a4", "a1"}});
  EXPECT_EQ(lemma5_error("a1", "a2", "beta", "a2", g), "mapping-mismatch");
  const MappingSymbol swapped("h", {{"a1", "beta"}, {"a2", "a2"}});
  EXPECT_EQ(lemma5_error("a1", "a2", "beta", "a2", swapped), "mapping-mismatch");
}

TEST(SingleCommutatorProperty, CertifiesWheneverPreconditionHolds) {
  const std::vector<std::string> curves{"a1", "a2", "a3", "a4", "a5", "alpha", "beta"};
  int checked = 0;
  for (const auto& a : curves) {
    for (const auto& b : curves) {
      for (const auto& c : curves) {
        for (const auto& d : curves) {
          if (a == b || c == d) {
            continue;
          }
          const MappingSymbol g("f", {{a, d}, {b, c}});
          const TwistCertificate cert = lemma5_commutator(a, b, c, d, g);
          EXPECT_TRUE(certify(cert, kConfig).accepted) << a << b << c << d;
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 42 * 42);
}

TEST(TwoCommutatorCertificate, TwoFactorsForTenthPower) {
  const TwistCertificate cert = theorem3_certificate();
  EXPECT_EQ(cert.expression.factors.size(), 2u);
  EXPECT_EQ(from_free_word(cert.expression.target).to_string(), "t2^10");
  EXPECT_EQ(cert.mappings.size(), 2u);
  const DerivationReport r = certify(cert, kConfig);
  EXPECT_TRUE(r.accepted) << (r.failure ? r.failure->message : "");
}

TEST(TwoCommutatorCertificate, NeedsTheChainRelation) {
  const TwistCertificate cert = theorem3_certificate();
  const DerivationReport r = certify(cert, kConfig.without_chain_relations());
  EXPECT_FALSE(r.accepted);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(cert.derivation.steps[r.failure->step].kind, MoveKind::chain_substitute);
  EXPECT_EQ(r.failure->kind, "unregistered-relation");
}

TEST(TwoCommutatorCertificate, LinkageIsChecked) {
  TwistCertificate cert = theorem3_certificate();
  cert.expression.target = Word::parse("t_a2^9");
  EXPECT_EQ(certify(cert, kConfig).failure->kind, "certificate-mismatch");
  cert = theorem3_certificate();
  cert.expression.factors.pop_back();
  EXPECT_EQ(certify(cert, kConfig).failure->kind, "certificate-mismatch");
}

}  // namespace
