#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "scltwist/errors.hpp"
#include "scltwist/word.hpp"

using scltwist::Word;

namespace {

const std::vector<std::string> kGens{"x", "y", "z"};

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(Word::parse("x y x^-1 y^-1").to_string(), "x y x^-1 y^-1");
  EXPECT_EQ(Word::parse("x x x").to_string(), "x^3");
  EXPECT_EQ(Word::parse("(x y)^-2").to_string(), "y^-1 x^-1 y^-1 x^-1");
  EXPECT_EQ(Word::parse("1").to_string(), "1");
  EXPECT_EQ(Word::parse("x x^-1").to_string(), "1");
  EXPECT_TRUE(Word::parse("  ").empty());
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(Word::parse("x^"), scltwist::ParseError);
  EXPECT_THROW(Word::parse("(x y"), scltwist::ParseError);
  EXPECT_THROW(Word::parse("x)"), scltwist::ParseError);
  EXPECT_THROW(Word::parse("x + y"), scltwist::ParseError);
}

TEST(Word, MultiplicationCancelsAtJunction) {
  EXPECT_EQ(Word::parse("x y") * Word::parse("y^-1 x"), Word::parse("x^2"));
  EXPECT_EQ(Word::parse("x y") * Word::parse("x y").inverse(), Word());
}

TEST(Word, GroupOps) {
  const Word x = Word::generator("x");
  const Word y = Word::generator("y");
  EXPECT_EQ(scltwist::commutator(x, y), Word::parse("x y x^-1 y^-1"));
  EXPECT_EQ(scltwist::conjugate(y, x), Word::parse("x y x^-1"));
  const std::vector<Word> pair{x, y};
  EXPECT_EQ(scltwist::group_op(scltwist::GroupOp::commutator, pair), scltwist::commutator(x, y));
  EXPECT_EQ(scltwist::group_op(scltwist::GroupOp::multiply, pair), Word::parse("x y"));
  const std::vector<Word> one{x};
  EXPECT_EQ(scltwist::group_op(scltwist::GroupOp::power, one, -3), Word::parse("x^-3"));
  EXPECT_EQ(scltwist::group_op(scltwist::GroupOp::invert, one), Word::parse("x^-1"));
  EXPECT_THROW(scltwist::group_op(scltwist::GroupOp::commutator, one), scltwist::InvalidArgument);
}

TEST(Word, Substitute) {
  const Word w = Word::parse("a b a^-1");
  const std::map<std::string, Word> images{{"a", Word::parse("x y")}, {"b", Word::parse("y^-1")}};
  EXPECT_EQ(scltwist::substitute(w, images), Word::parse("x y^-1 x^-1"));
}

TEST(WordProperty, MatchesStackReductionOracle) {
  std::mt19937_64 rng(20241);
  for (int trial = 0; trial < 2000; ++trial) {
    const oracle::Seq raw = oracle::random_seq(rng, kGens, 24);
    EXPECT_EQ(oracle::to_seq(oracle::to_word(raw)), oracle::reduce(raw));
  }
}

TEST(WordProperty, GroupAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = oracle::to_word(oracle::random_seq(rng, kGens, 12));
    const Word b = oracle::to_word(oracle::random_seq(rng, kGens, 12));
    const Word c = oracle::to_word(oracle::random_seq(rng, kGens, 12));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), Word());
    EXPECT_EQ(a.inverse().inverse(), a);
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(a.power(3) * a.power(-5), a.power(-2));
    EXPECT_EQ(Word::parse(a.to_string()), a);
    EXPECT_EQ(oracle::to_seq(scltwist::commutator(a, b)),
              oracle::commutator(oracle::to_seq(a), oracle::to_seq(b)));
  }
}

TEST(WordProperty, ExponentSumsAreAdditive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = oracle::to_word(oracle::random_seq(rng, kGens, 15));
    const Word b = oracle::to_word(oracle::random_seq(rng, kGens, 15));
    auto sa = scltwist::exponent_sums(a);
    auto sb = scltwist::exponent_sums(b);
    auto sab = scltwist::exponent_sums(a * b);
    for (const std::string& g : kGens) {
      EXPECT_EQ(sab[g], sa[g] + sb[g]);
    }
  }
}

}  // namespace
