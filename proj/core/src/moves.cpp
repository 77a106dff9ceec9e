#include <algorithm>
#include <array>

#include "scltwist/proof_script.hpp"

namespace scltwist {

namespace {

constexpr std::array<std::pair<MoveKind, std::string_view>, 8> kMoveNames{{
    {MoveKind::free_insert, "free-insert"},
    {MoveKind::free_cancel, "free-cancel"},
    {MoveKind::braid, "braid"},
    {MoveKind::commute, "commute"},
    {MoveKind::chain_substitute, "chain-substitute"},
    {MoveKind::definition_substitute, "definition-substitute"},
    {MoveKind::conjugate_equation, "conjugate-equation"},
    {MoveKind::twist_naturality, "twist-naturality"},
}};

std::string letter_text(const TwistLetter& l) {
  return symbol_name(l.symbol) + (l.sign < 0 ? "^-1" : "");
}

[[noreturn]] void mismatch(std::size_t position, const std::string& message) {
  throw MoveError("pattern-mismatch", position, message);
}

[[noreturn]] void unregistered(std::size_t position, const std::string& message) {
  throw MoveError("unregistered-relation", position, message);
}

class Rewriter {
 public:
  Rewriter(const TwistWord& word, const Move& move, const MoveContext& context)
      : letters_(word.letters()), move_(move), ctx_(context), pos_(move.position) {}

  TwistWord run() {
    switch (move_.kind) {
      case MoveKind::free_insert: return free_insert();
      case MoveKind::free_cancel: return free_cancel();
      case MoveKind::braid: return braid();
      case MoveKind::commute: return commute();
      case MoveKind::chain_substitute: return chain_substitute();
      case MoveKind::definition_substitute: return definition_substitute();
      case MoveKind::conjugate_equation: return conjugate_equation();
      case MoveKind::twist_naturality: return twist_naturality();
    }
    mismatch(pos_, "unknown move");
  }

 private:
  void need_window(std::size_t length) const {
    if (pos_ + length > letters_.size()) {
      mismatch(pos_, std::string(to_string(move_.kind)) + " needs " + std::to_string(length) +
                         " symbols but the word has " + std::to_string(letters_.size()));
    }
  }

  bool window_equals(const std::vector<TwistLetter>& pattern) const {
    return pos_ + pattern.size() <= letters_.size() &&
           std::equal(pattern.begin(), pattern.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos_));
  }

  TwistWord replace(std::size_t length, const std::vector<TwistLetter>& with) const {
    std::vector<TwistLetter> out(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos_));
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos_ + length), letters_.end());
    return TwistWord(std::move(out));
  }

  const TwistLetter& operand() const {
    if (!move_.operand) {
      mismatch(pos_, std::string(to_string(move_.kind)) + " needs a symbol argument");
    }
    return *move_.operand;
  }

  const MappingSymbol& mapping(const std::string& name) const {
    const auto it = ctx_.mappings.find(name);
    if (it == ctx_.mappings.end()) {
      unregistered(pos_, "mapping symbol '" + name + "' is not declared");
    }
    return it->second;
  }

  TwistWord free_insert() const {
    const TwistLetter& s = operand();
    if (pos_ > letters_.size()) {
      mismatch(pos_, "insertion point past the end of the word");
    }
    return replace(0, {s, s.inverse()});
  }

  TwistWord free_cancel() const {
    need_window(2);
    if (letters_[pos_ + 1] != letters_[pos_].inverse()) {
      mismatch(pos_, letter_text(letters_[pos_]) + " " + letter_text(letters_[pos_ + 1]) + " is not an inverse pair");
    }
    return replace(2, {});
  }

  TwistWord braid() const {
    need_window(3);
    const TwistLetter& x = letters_[pos_];
    const TwistLetter& y = letters_[pos_ + 1];
    if (letters_[pos_ + 2] != x || x.sign != y.sign || x.symbol == y.symbol || !x.symbol.is_twist() ||
        !y.symbol.is_twist()) {
      mismatch(pos_, "expected t_x t_y t_x with equal signs");
    }
    if (!ctx_.config.are_braided(x.symbol.name, y.symbol.name)) {
      unregistered(pos_, "{" + x.symbol.name + "," + y.symbol.name + "} is not a registered braid pair");
    }
    return replace(3, {y, x, y});
  }

  TwistWord commute() const {
    need_window(2);
    const TwistLetter& x = letters_[pos_];
    const TwistLetter& y = letters_[pos_ + 1];
    if (x.symbol != y.symbol) {
      if (!x.symbol.is_twist() || !y.symbol.is_twist()) {
        unregistered(pos_, "no commutation is registered for mapping symbols");
      }
      if (!ctx_.config.are_disjoint(x.symbol.name, y.symbol.name)) {
        unregistered(pos_, "{" + x.symbol.name + "," + y.symbol.name + "} is not a registered disjoint pair");
      }
    }
    return replace(2, {y, x});
  }

  TwistWord chain_substitute() const {
    const auto& chains = ctx_.config.chain_relations();
    if (chains.empty()) {
      unregistered(pos_, "the configuration has no chain relation");
    }
    for (const ChainRelation& rel : chains) {
      const std::array<std::pair<TwistWord, TwistWord>, 4> rules{{
          {rel.left, rel.right},
          {rel.right, rel.left},
          {rel.left.inverse(), rel.right.inverse()},
          {rel.right.inverse(), rel.left.inverse()},
      }};
      for (const auto& [from, to] : rules) {
        if (window_equals(from.letters())) {
          return replace(from.size(), to.letters());
        }
      }
    }
    mismatch(pos_, "no side of a registered chain relation starts here");
  }

  TwistWord definition_substitute() const {
    if (move_.direction == Direction::unfold) {
      need_window(1);
      const TwistLetter& l = letters_[pos_];
      if (!l.symbol.is_twist()) {
        mismatch(pos_, "expected a twist symbol");
      }
      auto expansion = ctx_.config.definition_expansion(l.symbol.name, l.sign);
      if (!expansion) {
        unregistered(pos_, "curve '" + l.symbol.name + "' has no registered definition");
      }
      return replace(1, expansion->letters());
    }
    if (move_.direction == Direction::fold) {
      if (!move_.curve) {
        mismatch(pos_, "fold needs the defined curve");
      }
      for (int sign : {1, -1}) {
        auto expansion = ctx_.config.definition_expansion(*move_.curve, sign);
        if (!expansion) {
          unregistered(pos_, "curve '" + *move_.curve + "' has no registered definition");
        }
        if (window_equals(expansion->letters())) {
          return replace(expansion->size(), {twist_letter(*move_.curve, sign)});
        }
      }
      mismatch(pos_, "window does not match the definition of '" + *move_.curve + "'");
    }
    mismatch(pos_, "definition-substitute needs 'fold <curve>' or 'unfold'");
  }

  TwistWord twist_naturality() const {
    if (move_.direction == Direction::fold) {
      need_window(3);
      const TwistLetter& f = letters_[pos_];
      const TwistLetter& t = letters_[pos_ + 1];
      if (f.symbol.is_twist() || !t.symbol.is_twist() || letters_[pos_ + 2] != f.inverse()) {
        mismatch(pos_, "expected f t_c f^-1");
      }
      const MappingSymbol& m = mapping(f.symbol.name);
      const auto target = f.sign > 0 ? m.image_of(t.symbol.name) : m.preimage_of(t.symbol.name);
      if (!target) {
        unregistered(pos_, "'" + m.name() + "' has no declared " + (f.sign > 0 ? "image" : "preimage") + " for '" +
                               t.symbol.name + "'");
      }
      return replace(3, {twist_letter(*target, t.sign)});
    }
    if (move_.direction == Direction::unfold) {
      need_window(1);
      const TwistLetter& f = operand();
      const TwistLetter& t = letters_[pos_];
      if (f.symbol.is_twist()) {
        mismatch(pos_, "unfold needs a mapping symbol");
      }
      if (!t.symbol.is_twist()) {
        mismatch(pos_, "expected a twist symbol");
      }
      const MappingSymbol& m = mapping(f.symbol.name);
      // t_y = f t_x f^-1 with y = f(x); with f^-1, y = f^-1(x).
      const auto source = f.sign > 0 ? m.preimage_of(t.symbol.name) : m.image_of(t.symbol.name);
      if (!source) {
        unregistered(pos_, "'" + m.name() + "' has no declared curve mapping onto '" + t.symbol.name + "'");
      }
      return replace(1, {f, twist_letter(*source, t.sign), f.inverse()});
    }
    mismatch(pos_, "twist-naturality needs 'fold' or 'unfold <mapping>'");
  }

  TwistWord conjugate_equation() const {
    if (pos_ != 0) {
      mismatch(pos_, "conjugate-equation acts on the whole word and takes position 0");
    }
    const TwistLetter& s = operand();
    if (ctx_.equation_source == nullptr) {
      unregistered(pos_, "no equation source to justify the conjugation");
    }
    for (const TwistLetter& l : ctx_.equation_source->letters()) {
      if (l.symbol == s.symbol) {
        continue;
      }
      if (!l.symbol.is_twist() || !s.symbol.is_twist() || !ctx_.config.are_disjoint(l.symbol.name, s.symbol.name)) {
        unregistered(pos_, letter_text(s) + " is not registered as commuting with " + letter_text(l));
      }
    }
    // s W s^-1 cancelling only at the junctions. Shapes where a cancellation
    // would expose another cancellable pair are refused so that conjugating
    // back by s^-1 always restores W.
    const auto& w = letters_;
    if (w.empty()) {
      mismatch(pos_, "conjugate-equation needs a nonempty word");
    }
    const bool drop_front = w.front() == s.inverse();
    const bool drop_back = w.back() == s;
    if ((drop_front && w.size() >= 2 && w[1] == s) || (drop_back && w.size() >= 2 && w[w.size() - 2] == s.inverse())) {
      mismatch(pos_, "ambiguous cancellation at the ends of the word");
    }
    std::vector<TwistLetter> out;
    if (!drop_front) {
      out.push_back(s);
    }
    out.insert(out.end(), w.begin() + (drop_front ? 1 : 0), w.end());
    if (drop_back) {
      out.pop_back();
    } else {
      out.push_back(s.inverse());
    }
    return TwistWord(std::move(out));
  }

  const std::vector<TwistLetter>& letters_;
  const Move& move_;
  const MoveContext& ctx_;
  std::size_t pos_;
};

}  // namespace

std::string_view to_string(MoveKind kind) {
  for (const auto& [k, name] : kMoveNames) {
    if (k == kind) {
      return name;
    }
  }
  return "unknown";
}

std::optional<MoveKind> parse_move_kind(std::string_view text) {
  for (const auto& [k, name] : kMoveNames) {
    if (name == text) {
      return k;
    }
  }
  return std::nullopt;
}

std::string Move::to_string() const {
  std::string out = std::string(scltwist::to_string(kind)) + " @" + std::to_string(position);
  if (direction == Direction::fold) {
    out += " fold";
  } else if (direction == Direction::unfold) {
    out += " unfold";
  }
  if (curve) {
    out += " " + *curve;
  }
  if (operand) {
    out += " " + letter_text(*operand);
  }
  return out;
}

TwistWord apply_move(const TwistWord& word, const Move& move, const MoveContext& context) {
  return Rewriter(word, move, context).run();
}

Move inverse_move(const Move& move, const TwistWord& before) {
  Move inv = move;
  switch (move.kind) {
    case MoveKind::free_insert:
      inv.kind = MoveKind::free_cancel;
      inv.operand.reset();
      break;
    case MoveKind::free_cancel:
      inv.kind = MoveKind::free_insert;
      inv.operand = before[move.position];
      break;
    case MoveKind::braid:
    case MoveKind::commute:
    case MoveKind::chain_substitute:
      break;
    case MoveKind::definition_substitute:
      if (move.direction == Direction::unfold) {
        inv.direction = Direction::fold;
        inv.curve = before[move.position].symbol.name;
      } else {
        inv.direction = Direction::unfold;
        inv.curve.reset();
      }
      break;
    case MoveKind::twist_naturality:
      if (move.direction == Direction::fold) {
        inv.direction = Direction::unfold;
        inv.operand = before[move.position];
      } else {
        inv.direction = Direction::fold;
        inv.operand.reset();
      }
      break;
    case MoveKind::conjugate_equation:
      inv.operand = move.operand->inverse();
      break;
  }
  return inv;
}

}  // namespace scltwist
