#include "scltwist/twist_word.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "scltwist/detail/word_syntax.hpp"
#include "scltwist/errors.hpp"

namespace scltwist {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<std::string> twist_curve_of(std::string_view atom) {
  if (atom.size() > 2 && atom.substr(0, 2) == "t_") {
    return std::string(atom.substr(2));
  }
  if (atom.size() > 1 && atom.front() == 't' && all_digits(atom.substr(1))) {
    return "a" + std::string(atom.substr(1));
  }
  return std::nullopt;
}

}  // namespace

TwistLetter twist_letter(std::string curve, int sign) { return {TwistSymbol::twist(std::move(curve)), sign}; }

TwistLetter mapping_letter(std::string symbol, int sign) { return {TwistSymbol::mapping(std::move(symbol)), sign}; }

std::string symbol_name(const TwistSymbol& symbol) {
  if (!symbol.is_twist()) {
    return symbol.name;
  }
  if (symbol.name.size() > 1 && symbol.name.front() == 'a' && all_digits(std::string_view(symbol.name).substr(1))) {
    return "t" + symbol.name.substr(1);
  }
  return "t_" + symbol.name;
}

TwistWord TwistWord::parse(std::string_view text, const std::map<std::string, TwistWord>& bindings,
                           const std::set<std::string>& mappings) {
  auto resolve = [&](std::string_view atom) -> std::vector<TwistLetter> {
    const std::string name(atom);
    if (const auto it = bindings.find(name); it != bindings.end()) {
      return it->second.letters();
    }
    if (mappings.contains(name)) {
      return {mapping_letter(name)};
    }
    if (auto curve = twist_curve_of(atom)) {
      return {twist_letter(std::move(*curve))};
    }
    throw ParseError("unknown symbol '" + name + "'");
  };
  return TwistWord(detail::read_word_syntax<TwistLetter>(text, resolve));
}

TwistWord TwistWord::reduced() const {
  std::vector<TwistLetter> out;
  for (const TwistLetter& l : letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return TwistWord(std::move(out));
}

TwistWord TwistWord::inverse() const {
  std::vector<TwistLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return TwistWord(std::move(out));
}

TwistWord TwistWord::power(std::int64_t exponent) const {
  const TwistWord base = exponent < 0 ? inverse() : *this;
  TwistWord out;
  for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    out = out * base;
  }
  return out;
}

bool TwistWord::contains_mapping() const {
  return std::any_of(letters_.begin(), letters_.end(), [](const TwistLetter& l) { return !l.symbol.is_twist(); });
}

std::string TwistWord::to_string() const {
  return detail::format_letter_runs(letters_, [](const TwistLetter& l) { return symbol_name(l.symbol); });
}

TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs) {
  std::vector<TwistLetter> out = lhs.letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return TwistWord(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const TwistWord& word) { return os << word.to_string(); }

std::string generator_name(const TwistSymbol& symbol) {
  return symbol.is_twist() ? "t_" + symbol.name : symbol.name;
}

Word to_free_word(const TwistWord& word) {
  std::vector<Letter> raw;
  raw.reserve(word.size());
  for (const TwistLetter& l : word.letters()) {
    raw.push_back({generator_name(l.symbol), l.sign});
  }
  return Word::reduce(raw);
}

TwistWord from_free_word(const Word& word) {
  std::vector<TwistLetter> out;
  out.reserve(word.size());
  for (const Letter& l : word.letters()) {
    if (l.generator.size() > 2 && l.generator.starts_with("t_")) {
      out.push_back(twist_letter(l.generator.substr(2), l.sign));
    } else {
      out.push_back(mapping_letter(l.generator, l.sign));
    }
  }
  return TwistWord(std::move(out));
}

}  // namespace scltwist
