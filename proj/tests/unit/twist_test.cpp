#include <gtest/gtest.h>

#include "scltwist/curve_configuration.hpp"
#include "scltwist/errors.hpp"
#include "scltwist/twist_word.hpp"

using scltwist::CurveConfiguration;
using scltwist::TwistWord;

namespace {

TEST(TwistWord, ParseNames) {
  const TwistWord w = TwistWord::parse("t1 t_alpha^-1 t2^2");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], scltwist::twist_letter("a1"));
  EXPECT_EQ(w[1], scltwist::twist_letter("alpha", -1));
  EXPECT_EQ(w.to_string(), "t1 t_alpha^-1 t2^2");
  EXPECT_THROW(TwistWord::parse("q1"), scltwist::ParseError);
}

TEST(TwistWord, KeepsRawSymbols) {
  const TwistWord w = TwistWord::parse("t1 t1^-1 t2");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.reduced(), TwistWord::parse("t2"));
  EXPECT_EQ(w.to_string(), "t1 t1^-1 t2");
}

TEST(TwistWord, BindingsAndMappings) {
  const std::map<std::string, TwistWord> bindings{{"X", TwistWord::parse("t1 t2")}};
  const TwistWord w = TwistWord::parse("X^-1 g t3", bindings, {"g"});
  EXPECT_EQ(w.to_string(), "t2^-1 t1^-1 g t3");
  EXPECT_TRUE(w.contains_mapping());
  EXPECT_EQ(scltwist::from_free_word(scltwist::to_free_word(w)), w);
}

TEST(CurveConfiguration, StandardTables) {
  const auto c = CurveConfiguration::standard();
  EXPECT_EQ(c.curves().size(), 7u);
  EXPECT_EQ(c.braid_pairs().size(), 2u);
  EXPECT_EQ(c.disjoint_pairs().size(), 8u);
  EXPECT_EQ(c.chain_relations().size(), 1u);
  EXPECT_EQ(c.definitions().size(), 2u);
  EXPECT_TRUE(c.are_braided("a2", "a1"));
  EXPECT_TRUE(c.are_disjoint("a3", "a1"));
  EXPECT_FALSE(c.are_braided("a1", "a3"));
  EXPECT_FALSE(c.are_disjoint("a1", "a2"));
  EXPECT_EQ(c.definition_expansion("alpha")->to_string(), "t2^2 t3 t2^-2");
  EXPECT_EQ(c.definition_expansion("beta", -1)->to_string(), "t2^3 t3^-1 t2^-3");
  EXPECT_FALSE(c.definition_expansion("a1").has_value());
}

TEST(CurveConfiguration, RejectsOverlappingTables) {
  EXPECT_THROW(CurveConfiguration({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}, {}, {}), scltwist::InvalidArgument);
  EXPECT_THROW(CurveConfiguration({"a"}, {{"a", "c"}}, {}, {}, {}), scltwist::InvalidArgument);
  EXPECT_THROW(scltwist::CurvePair("a", "a"), scltwist::InvalidArgument);
}

TEST(MappingSymbol, Validation) {
  const scltwist::MappingSymbol g("g", {{"a4", "a1"}, {"alpha", "a5"}});
  EXPECT_EQ(g.image_of("a4"), "a1");
  EXPECT_EQ(g.preimage_of("a5"), "alpha");
  EXPECT_FALSE(g.image_of("a2").has_value());
  EXPECT_THROW(scltwist::MappingSymbol("g", {{"a1", "a2"}, {"a3", "a2"}}), scltwist::InvalidArgument);
  EXPECT_THROW(scltwist::MappingSymbol("t3", {}), scltwist::InvalidArgument);
  EXPECT_THROW(scltwist::MappingSymbol("t_x", {}), scltwist::InvalidArgument);
}

}  // namespace
