#include <gtest/gtest.h>

#include <random>

#include "scltwist/proof_script.hpp"

using namespace scltwist;

namespace {

const CurveConfiguration kConfig = CurveConfiguration::standard();

TEST(ProofScript, ShippedTheoremScriptIsAccepted) {
  const ProofScript s = theorem3_script();
  EXPECT_EQ(s.source.to_string(), "t4 t5");
  EXPECT_EQ(s.claim, TwistWord::parse("t1 t_alpha t2^4 (t1 t2^-1 t_beta t2^-1) t2^6"));
  const DerivationReport r = check_script(s, kConfig);
  EXPECT_TRUE(r.accepted) << (r.failure ? r.failure->message : "");
  EXPECT_EQ(r.words.size(), s.steps.size() + 1);
  EXPECT_EQ(r.words.back(), s.claim);
}

TEST(ProofScript, EmptyScriptIsReflexive) {
  const ProofScript s = parse_proof_script("source t1 t2^-1\nclaim t1 t2^-1\n");
  EXPECT_TRUE(check_script(s, kConfig).accepted);
}

TEST(ProofScript, BraidOnDisjointPairIsRejected) {
  const ProofScript s = parse_proof_script("source t1 t3 t1\nstep braid @0\nclaim t3 t1 t3\n");
  const DerivationReport r = check_script(s, kConfig);
  EXPECT_FALSE(r.accepted);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->step, 0u);
  EXPECT_EQ(r.failure->kind, "unregistered-relation");
}

TEST(ProofScript, ClaimMismatch) {
  const ProofScript s = parse_proof_script("source t1 t3\nstep commute @0\nclaim t1 t3\n");
  const DerivationReport r = check_script(s, kConfig);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->kind, "claim-mismatch");
  EXPECT_EQ(r.failure->step, 1u);
}

TEST(ProofScript, Syntax) {
  const ProofScript s = parse_proof_script(
      "# comment\r\n"
      "mapping h: a1 -> a2, a2 -> beta\r\n"
      "let X = t1 t2^-1   # trailing comment\r\n"
      "source X h X^-1 h^-1\r\n"
      "step free-insert @4 h^-1\r\n"
      "step twist-naturality @2 fold\r\n"
      "step twist-naturality @3 fold\r\n"
      "claim t1 t2^-1 t_beta t2^-1\r\n");
  ASSERT_EQ(s.mappings.size(), 1u);
  EXPECT_EQ(s.mappings[0].image_of("a2"), "beta");
  ASSERT_EQ(s.bindings.size(), 1u);
  EXPECT_EQ(s.source.to_string(), "t1 t2^-1 h t2 t1^-1 h^-1");
  EXPECT_EQ(s.steps.size(), 3u);
  EXPECT_TRUE(check_script(s, kConfig).accepted);
}

TEST(ProofScript, ParseErrorsCarryLines) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_proof_script(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("source t1\nstep rotate @0\nclaim t1\n"), 2u);
  EXPECT_EQ(line_of("source t1\nstep braid 0\nclaim t1\n"), 2u);
  EXPECT_EQ(line_of("source t1\nstep braid @0 extra\nclaim t1\n"), 2u);
  EXPECT_EQ(line_of("# c\n\nsource q7\nclaim t1\n"), 3u);
  EXPECT_EQ(line_of("step braid @0\n"), 1u);
  EXPECT_EQ(line_of("source t1\n"), 2u);
  EXPECT_EQ(line_of("source t1\nclaim t1\nstep braid @0\n"), 3u);
  EXPECT_EQ(line_of("mapping g a1 -> a2\nsource t1\nclaim t1\n"), 1u);
  EXPECT_EQ(line_of("mapping g: a1 -> a2, a3 -> a2\nsource t1\nclaim t1\n"), 1u);
  EXPECT_EQ(line_of("source t1\nstep definition-substitute @0 fold\nclaim t1\n"), 2u);
  EXPECT_EQ(line_of("source t1\nstep twist-naturality @0 unfold t2\nclaim t1\n"), 2u);
  EXPECT_EQ(line_of("frobnicate\n"), 1u);
}

TEST(ProofScript, FormatRoundTrip) {
  const ProofScript s = theorem3_script();
  const std::string text = format_proof_script(s);
  const ProofScript again = parse_proof_script(text);
  EXPECT_EQ(again.source, s.source);
  EXPECT_EQ(again.claim, s.claim);
  EXPECT_EQ(again.steps, s.steps);
  EXPECT_EQ(format_proof_script(again), text);
}

TEST(ProofScript, LinesAreLfNormalized) {
  std::string text(theorem3_script_text());
  std::string crlf;
  for (char c : text) {
    if (c == '\n') {
      crlf += '\r';
    }
    crlf += c;
  }
  EXPECT_EQ(parse_proof_script(crlf).steps, theorem3_script().steps);
}

// Inserting a free-insert immediately followed by its free-cancel keeps the
// script accepted.
TEST(ProofScriptProperty, InsertCancelPairPreservesAcceptance) {
  const ProofScript base = theorem3_script();
  const DerivationReport replay = check_script(base, kConfig);
  ASSERT_TRUE(replay.accepted);
  std::mt19937_64 rng(31337);
  const std::vector<std::string> curves{"a1", "a2", "a3", "a4", "a5", "alpha", "beta"};
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_step(0, base.steps.size());
    const std::size_t at = pick_step(rng);
    const std::size_t word_size = replay.words[at].size();
    std::uniform_int_distribution<std::size_t> pick_pos(0, word_size);
    std::uniform_int_distribution<std::size_t> pick_curve(0, curves.size() - 1);
    const std::size_t pos = pick_pos(rng);
    const TwistLetter s = twist_letter(curves[pick_curve(rng)], trial % 2 == 0 ? 1 : -1);
    ProofScript mutated = base;
    const auto it = mutated.steps.begin() + static_cast<std::ptrdiff_t>(at);
    const auto inserted = mutated.steps.insert(it, Move{MoveKind::free_insert, pos, Direction::none, s, {}});
    mutated.steps.insert(inserted + 1, Move{MoveKind::free_cancel, pos, Direction::none, {}, {}});
    EXPECT_TRUE(check_script(mutated, kConfig).accepted) << "step " << at << " pos " << pos;
  }
}

}  // namespace
