#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scltwist/curve_configuration.hpp"
#include "scltwist/errors.hpp"
#include "scltwist/twist_word.hpp"

namespace scltwist {

enum class MoveKind {
  free_insert,
  free_cancel,
  braid,
  commute,
  chain_substitute,
  definition_substitute,
  conjugate_equation,
  twist_naturality,
};

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> parse_move_kind(std::string_view text);

enum class Direction { none, fold, unfold };

/// One rewriting step. Positions are 0-based symbol indices into the word as
/// it stands after the previous step.
///
///   free-insert @i s            insert s s^-1 before index i
///   free-cancel @i              drop the inverse pair at i, i+1
///   braid @i                    x y x -> y x y (all signs equal), {x,y} braided
///   commute @i                  x y -> y x, {x,y} disjoint
///   chain-substitute @i         left <-> right of a registered chain relation
///   definition-substitute @i unfold | fold <curve>
///                               t_c^e <-> by t_img^e by^-1
///   twist-naturality @i fold | unfold f[^-1]
///                               f t_c^e f^-1 <-> t_f(c)^e
///   conjugate-equation @0 s     W -> s W s^-1 when s commutes with the source;
///                               cancels at the two ends, refuses shapes where
///                               that would expose a further cancellation
struct Move {
  MoveKind kind = MoveKind::free_cancel;
  std::size_t position = 0;
  Direction direction = Direction::none;
  std::optional<TwistLetter> operand;  // free-insert, conjugate-equation, naturality unfold
  std::optional<std::string> curve;    // definition fold target

  std::string to_string() const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Failure of a single move; `code()` is "pattern-mismatch" or
/// "unregistered-relation".
class MoveError : public Error {
 public:
  MoveError(std::string code, std::size_t position, const std::string& message)
      : Error(std::move(code), "at position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct MoveContext {
  const CurveConfiguration& config;
  const std::map<std::string, MappingSymbol>& mappings;
  /// Left-hand side of the equation being rewritten; needed by
  /// conjugate-equation.
  const TwistWord* equation_source = nullptr;
};

/// Applies one move. The result differs from `word` only inside the matched
/// window (conjugate-equation touches both ends). Throws MoveError.
TwistWord apply_move(const TwistWord& word, const Move& move, const MoveContext& context);

/// A move that undoes `move`, which was applied to `before`.
Move inverse_move(const Move& move, const TwistWord& before);

struct ProofScript {
  std::vector<MappingSymbol> mappings;
  std::vector<std::pair<std::string, TwistWord>> bindings;
  TwistWord source;
  std::vector<Move> steps;
  TwistWord claim;

  std::map<std::string, MappingSymbol> mapping_table() const;
};

/// Line-oriented script text; see docs/proof-script.md. CRLF is normalized.
/// Throws ParseError carrying the offending line.
ProofScript parse_proof_script(std::string_view text);

/// Canonical text; parse_proof_script(format_proof_script(s)) reproduces s.
std::string format_proof_script(const ProofScript& script);

struct DerivationFailure {
  /// Index of the failing step; steps.size() when every step applied but the
  /// final word differs from the claim.
  std::size_t step = 0;
  std::string kind;  // pattern-mismatch | unregistered-relation | claim-mismatch
  std::string message;
};

struct DerivationReport {
  bool accepted = false;
  /// words[0] is the source, words[i+1] the word after step i (up to the
  /// first failure).
  std::vector<TwistWord> words;
  std::optional<DerivationFailure> failure;
};

DerivationReport check_script(const ProofScript& script, const CurveConfiguration& config);

/// The shipped derivation t4 t5 = t1 t_alpha t2^4 (t1 t2^-1 t_beta t2^-1) t2^6.
std::string_view theorem3_script_text();
ProofScript theorem3_script();

}  // namespace scltwist
