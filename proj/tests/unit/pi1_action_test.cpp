#include <gtest/gtest.h>

#include <random>

#include "scltwist/errors.hpp"
#include "scltwist/pi1_action.hpp"

using namespace scltwist;

namespace {

const std::vector<std::string> kSymbols{"a1", "a2", "a3", "a4", "a5", "alpha", "beta"};

TwistWord random_twist_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, kSymbols.size() - 1);
  std::bernoulli_distribution sign;
  std::vector<TwistLetter> out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(twist_letter(kSymbols[pick(rng)], sign(rng) ? 1 : -1));
  }
  return TwistWord(std::move(out));
}

std::string error_code(const TwistModel& model, const TwistWord& w) {
  try {
    model.evaluate(w);
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

TEST(Pi1Action, StandardModelPassesEveryCheck) {
  const auto checks = validate_model();
  EXPECT_EQ(checks.size(), 31u);
  for (const ModelCheck& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
}

TEST(Pi1Action, TwistImages) {
  const Automorphism t1 = twist_automorphism("a1");
  EXPECT_EQ(t1.image("x"), Word::parse("x"));
  EXPECT_EQ(t1.image("y"), Word::parse("x y"));
  EXPECT_EQ(t1.image("w"), Word::parse("x w"));
  const Automorphism t4 = twist_automorphism("a4");
  EXPECT_EQ(t4.image("y"), Word::parse("x z y z^-1 x^-1"));
  EXPECT_EQ(t4.image("w"), Word::parse("x z w"));
}

TEST(Pi1Action, DisplayedEquality) {
  const TwistModel m = TwistModel::standard();
  EXPECT_TRUE(m.equal_in_rep(TwistWord::parse("t4 t_alpha^-1 t5 t1^-1"),
                             TwistWord::parse("t2^4 (t1 t2^-1 t_beta t2^-1) t2^6")));
  EXPECT_TRUE(m.equal_in_rep(TwistWord::parse("t4 t5"), TwistWord::parse("(t1 t2 t3)^4")));
  EXPECT_FALSE(m.equal_in_rep(TwistWord::parse("t1 t3"), TwistWord::parse("t1 t2")));
  EXPECT_FALSE(m.equal_in_rep(TwistWord::parse("t1 t2 t3"), TwistWord::parse("t3 t2 t1")));
}

TEST(Pi1Action, Errors) {
  const TwistModel m = TwistModel::standard();
  EXPECT_EQ(error_code(m, TwistWord::parse("t1 f", {}, {"f"})), "unresolved-symbol");
  EXPECT_EQ(error_code(m, TwistWord::parse("t_gamma")), "unknown-curve");
  EXPECT_THROW(m.twist("alpha"), Error);
}

TEST(Pi1Action, HomologyIsUnipotent) {
  const TwistModel m = TwistModel::standard();
  for (const auto& c : kSymbols) {
    const HomologyMatrix h = m.evaluate(TwistWord{twist_letter(c)}).homology();
    EXPECT_EQ(h.determinant(), 1) << c;
    EXPECT_TRUE(h.is_transvection()) << c;
  }
  EXPECT_FALSE(m.evaluate(TwistWord::parse("t1 t2")).homology().is_transvection());
}

TEST(Pi1Action, BrokenModelFailsBraid) {
  const std::vector<std::string> basis{"x", "y", "z", "w"};
  const TwistModel broken =
      TwistModel::standard().with_generator("a1", Automorphism::identity(basis), Automorphism::identity(basis));
  bool braid_failed = false;
  bool nontrivial_failed = false;
  for (const ModelCheck& c : validate_model(broken)) {
    braid_failed |= c.name == "braid {a1,a2}" && !c.passed;
    nontrivial_failed |= c.name == "nontrivial a1" && !c.passed;
  }
  EXPECT_TRUE(braid_failed);
  EXPECT_TRUE(nontrivial_failed);
}

// evaluate is a homomorphism from raw twist words under concatenation.
TEST(Pi1ActionProperty, EvaluateIsHomomorphism) {
  const TwistModel m = TwistModel::standard();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const TwistWord a = random_twist_word(rng, 6);
    const TwistWord b = random_twist_word(rng, 6);
    const Automorphism ab = m.evaluate(a * b);
    EXPECT_EQ(ab, m.evaluate(a).compose(m.evaluate(b)));
    EXPECT_TRUE(m.evaluate(a * a.inverse()).is_identity());
    EXPECT_EQ(m.evaluate(a.reduced()), m.evaluate(a));
    const std::string g = m.basis()[pick(rng)];
    EXPECT_EQ(ab.image(g), m.evaluate(a).apply(m.evaluate(b).image(g)));
  }
}

TEST(Pi1ActionProperty, InversesAreCoherent) {
  const TwistModel m = TwistModel::standard();
  for (const auto& c : m.generator_curves()) {
    EXPECT_TRUE(m.twist(c).compose(m.twist_inverse(c)).is_identity()) << c;
    EXPECT_TRUE(m.twist_inverse(c).compose(m.twist(c)).is_identity()) << c;
  }
}

}  // namespace
