#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scltwist {

/// True for nonempty strings over [a-zA-Z0-9_].
bool is_identifier(std::string_view text) noexcept;

/// A signed generator letter. Generators are compared by name; alphabets are
/// open-ended.
struct Letter {
  std::string generator;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Element of a free group, always stored freely reduced. The empty word is
/// the identity.
class Word {
 public:
  Word() = default;

  static Word reduce(std::span<const Letter> raw);
  static Word generator(std::string name);

  /// Text form: space-separated `name`, `name^-1`, `name^3`, groups `(x y)^-2`;
  /// "1" denotes the identity. Throws ParseError.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word power(std::int64_t exponent) const;

  /// Runs of one letter are written with an exponent; the identity is "1".
  std::string to_string() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& word);

/// [a,b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// g w g^-1.
Word conjugate(const Word& w, const Word& g);

enum class GroupOp { multiply, invert, conjugate, commutator, power };

/// Uniform entry point over the group operations. Operand counts: multiply
/// takes any number, invert and power one, conjugate two (word, conjugator),
/// commutator two. Throws InvalidArgument on a count mismatch.
Word group_op(GroupOp op, std::span<const Word> operands, std::int64_t exponent = 1);

/// Homomorphic substitution; generators without an image are kept.
Word substitute(const Word& word, const std::map<std::string, Word>& images);

/// Sum of signs per generator (the abelianization of the word).
std::map<std::string, std::int64_t> exponent_sums(const Word& word);

}  // namespace scltwist
