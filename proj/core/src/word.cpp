#include "scltwist/word.hpp"

#include <algorithm>

#include "scltwist/detail/word_syntax.hpp"
#include "scltwist/errors.hpp"

namespace scltwist {

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) {
    return false;
  }
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& letter : raw) {
    if (letter.sign != 1 && letter.sign != -1) {
      throw InvalidArgument("letter sign must be +1 or -1");
    }
    if (!out.empty() && out.back().generator == letter.generator && out.back().sign == -letter.sign) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return Word(std::move(out));
}

Word Word::generator(std::string name) {
  if (!is_identifier(name)) {
    throw InvalidArgument("invalid generator name '" + name + "'");
  }
  return Word({Letter{std::move(name), 1}});
}

Word Word::parse(std::string_view text) {
  auto resolve = [](std::string_view atom) { return std::vector<Letter>{{std::string(atom), 1}}; };
  const auto letters = detail::read_word_syntax<Letter>(text, resolve);
  return reduce(letters);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word Word::power(std::int64_t exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  std::uint64_t remaining = exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent)
                                         : static_cast<std::uint64_t>(exponent);
  Word result;
  while (remaining != 0) {
    if ((remaining & 1U) != 0) {
      result = result * base;
    }
    remaining >>= 1U;
    if (remaining != 0) {
      base = base * base;
    }
  }
  return result;
}

std::string Word::to_string() const {
  return detail::format_letter_runs(letters_, [](const Letter& l) { return l.generator; });
}

Word operator*(const Word& lhs, const Word& rhs) {
  // Only the junction can cancel; both operands are already reduced.
  std::size_t cancel = 0;
  const auto& a = lhs.letters_;
  const auto& b = rhs.letters_;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == b[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& word) { return os << word.to_string(); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word conjugate(const Word& w, const Word& g) { return g * w * g.inverse(); }

Word group_op(GroupOp op, std::span<const Word> operands, std::int64_t exponent) {
  auto require = [&](std::size_t n, const char* name) {
    if (operands.size() != n) {
      throw InvalidArgument(std::string(name) + " takes " + std::to_string(n) + " operand(s), got " +
                            std::to_string(operands.size()));
    }
  };
  switch (op) {
    case GroupOp::multiply: {
      Word out;
      for (const Word& w : operands) {
        out = out * w;
      }
      return out;
    }
    case GroupOp::invert:
      require(1, "invert");
      return operands[0].inverse();
    case GroupOp::conjugate:
      require(2, "conjugate");
      return conjugate(operands[0], operands[1]);
    case GroupOp::commutator:
      require(2, "commutator");
      return commutator(operands[0], operands[1]);
    case GroupOp::power:
      require(1, "power");
      return operands[0].power(exponent);
  }
  throw InvalidArgument("unknown group operation");
}

Word substitute(const Word& word, const std::map<std::string, Word>& images) {
  Word out;
  for (const Letter& letter : word.letters()) {
    const auto it = images.find(letter.generator);
    Word image = it == images.end() ? Word::generator(letter.generator) : it->second;
    out = out * (letter.sign > 0 ? image : image.inverse());
  }
  return out;
}

std::map<std::string, std::int64_t> exponent_sums(const Word& word) {
  std::map<std::string, std::int64_t> sums;
  for (const Letter& letter : word.letters()) {
    sums[letter.generator] += letter.sign;
  }
  return sums;
}

}  // namespace scltwist
