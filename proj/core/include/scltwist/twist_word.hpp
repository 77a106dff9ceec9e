#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scltwist/word.hpp"

namespace scltwist {

/// A Dehn twist about a named curve, or a formal mapping class symbol.
struct TwistSymbol {
  enum class Kind { twist, mapping };

  Kind kind = Kind::twist;
  std::string name;  // curve name for twists, symbol name for mappings

  static TwistSymbol twist(std::string curve) { return {Kind::twist, std::move(curve)}; }
  static TwistSymbol mapping(std::string symbol) { return {Kind::mapping, std::move(symbol)}; }

  bool is_twist() const { return kind == Kind::twist; }

  friend bool operator==(const TwistSymbol&, const TwistSymbol&) = default;
  friend auto operator<=>(const TwistSymbol&, const TwistSymbol&) = default;
};

struct TwistLetter {
  TwistSymbol symbol;
  int sign = 1;

  TwistLetter inverse() const { return {symbol, -sign}; }

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
  friend auto operator<=>(const TwistLetter&, const TwistLetter&) = default;
};

TwistLetter twist_letter(std::string curve, int sign = 1);
TwistLetter mapping_letter(std::string symbol, int sign = 1);

/// Textual name of a symbol: t<N> for curve a<N>, t_<curve> otherwise, and
/// the bare name for a mapping symbol.
std::string symbol_name(const TwistSymbol& symbol);

/// A word in twists and mapping symbols. Proof scripts rewrite these literally,
/// so the sequence is kept exactly as built; `reduced()` gives the free normal
/// form.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<TwistLetter> letters) : letters_(std::move(letters)) {}
  TwistWord(std::initializer_list<TwistLetter> letters) : letters_(letters) {}

  /// Atoms: t<N> (twist about a<N>), t_<curve>, a name in `bindings`
  /// (spliced), or a name in `mappings`. Throws ParseError.
  static TwistWord parse(std::string_view text, const std::map<std::string, TwistWord>& bindings = {},
                         const std::set<std::string>& mappings = {});

  const std::vector<TwistLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const TwistLetter& operator[](std::size_t i) const { return letters_[i]; }

  TwistWord reduced() const;
  TwistWord inverse() const;
  TwistWord power(std::int64_t exponent) const;
  bool contains_mapping() const;

  std::string to_string() const;

  /// Concatenation without reduction.
  friend TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs);
  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  std::vector<TwistLetter> letters_;
};

std::ostream& operator<<(std::ostream& os, const TwistWord& word);

/// Free-group generator for a twist symbol: "t_<curve>" or the mapping name.
std::string generator_name(const TwistSymbol& symbol);
Word to_free_word(const TwistWord& word);
/// Inverse of to_free_word: generators "t_<curve>" become twists, anything
/// else a mapping symbol.
TwistWord from_free_word(const Word& word);

}  // namespace scltwist
