#pragma once

// Shared reader for the textual word syntax used by free-group words, twist
// words and proof scripts:
//
//   word  := "1" | item*
//   item  := (ident | "(" word ")") ("^" ["-"] digits)?
//
// Atoms are resolved by the caller, so the same reader serves generator
// names, twist symbols and let-bindings.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "scltwist/errors.hpp"

namespace scltwist::detail {

template <class LetterT, class Resolve>
class WordSyntaxReader {
 public:
  WordSyntaxReader(std::string_view text, Resolve& resolve) : text_(text), resolve_(resolve) {}

  std::vector<LetterT> read() {
    skip_space();
    if (rest_is_identity()) {
      return {};
    }
    auto letters = read_sequence(/*nested=*/false);
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return letters;
  }

 private:
  bool rest_is_identity() const {
    std::string_view rest = text_.substr(pos_);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
      rest.remove_suffix(1);
    }
    return rest == "1";
  }

  std::vector<LetterT> read_sequence(bool nested) {
    std::vector<LetterT> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) {
        if (nested) {
          fail("missing ')'");
        }
        return out;
      }
      const char c = text_[pos_];
      if (c == ')') {
        if (!nested) {
          fail("unbalanced ')'");
        }
        return out;
      }
      std::vector<LetterT> item;
      if (c == '(') {
        ++pos_;
        item = read_sequence(/*nested=*/true);
        ++pos_;  // ')'
      } else if (is_ident_char(c)) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
          ++pos_;
        }
        item = resolve_(text_.substr(start, pos_ - start));
      } else {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
      const std::int64_t exponent = read_exponent();
      append_power(out, item, exponent);
    }
  }

  std::int64_t read_exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      return 1;
    }
    ++pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) {
        fail("exponent too large");
      }
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected an integer exponent after '^'");
    }
    return negative ? -value : value;
  }

  static void append_power(std::vector<LetterT>& out, const std::vector<LetterT>& item,
                           std::int64_t exponent) {
    std::vector<LetterT> base = item;
    if (exponent < 0) {
      std::reverse(base.begin(), base.end());
      for (auto& letter : base) {
        letter = letter.inverse();
      }
      exponent = -exponent;
    }
    for (std::int64_t i = 0; i < exponent; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word syntax at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  static constexpr std::int64_t kMaxExponent = 1'000'000;

  std::string_view text_;
  Resolve& resolve_;
  std::size_t pos_ = 0;
};

/// `resolve(std::string_view atom) -> std::vector<LetterT>`; LetterT needs
/// `inverse()`. Letters are returned exactly as written (no reduction).
template <class LetterT, class Resolve>
std::vector<LetterT> read_word_syntax(std::string_view text, Resolve&& resolve) {
  WordSyntaxReader<LetterT, std::remove_reference_t<Resolve>> reader(text, resolve);
  return reader.read();
}

/// Writes letters with runs of the same signed symbol collapsed into `s^n`.
template <class LetterT, class Name>
std::string format_letter_runs(const std::vector<LetterT>& letters, Name&& name_of) {
  if (letters.empty()) {
    return "1";
  }
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i + 1;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    const auto run = static_cast<std::int64_t>(j - i);
    const std::int64_t exponent = run * letters[i].sign;
    if (!out.empty()) {
      out += ' ';
    }
    out += name_of(letters[i]);
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

}  // namespace scltwist::detail
