#include "scltwist/proof_script.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace scltwist {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
    ++i;
  }
  return {line.substr(0, i), trim(line.substr(i))};
}

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) {
    text_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        continue;
      }
      text_ += text[i];
    }
  }

  ProofScript parse() {
    std::istringstream in(text_);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string_view line = raw;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      try {
        directive(line);
      } catch (const ParseError& e) {
        if (e.line() != 0) {
          throw;
        }
        throw ParseError(e.what(), line_);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line_);
      }
    }
    if (!have_source_) {
      throw ParseError("script has no 'source' line", line_ + 1);
    }
    if (!have_claim_) {
      throw ParseError("script has no 'claim' line", line_ + 1);
    }
    return std::move(script_);
  }

 private:
  void directive(std::string_view line) {
    const auto [keyword, rest] = split_keyword(line);
    if (have_claim_) {
      throw ParseError("nothing may follow the 'claim' line");
    }
    if (keyword == "mapping") {
      mapping(rest);
    } else if (keyword == "let") {
      let(rest);
    } else if (keyword == "source") {
      if (have_source_) {
        throw ParseError("duplicate 'source' line");
      }
      script_.source = word(rest);
      have_source_ = true;
    } else if (keyword == "step") {
      if (!have_source_) {
        throw ParseError("'step' before 'source'");
      }
      script_.steps.push_back(step(rest));
    } else if (keyword == "claim") {
      if (!have_source_) {
        throw ParseError("'claim' before 'source'");
      }
      script_.claim = word(rest);
      have_claim_ = true;
    } else {
      throw ParseError("unknown directive '" + std::string(keyword) + "'");
    }
  }

  // mapping <name>: <curve> -> <curve>, ...
  void mapping(std::string_view rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'mapping <name>: <curve> -> <curve>, ...'");
    }
    const std::string name(trim(rest.substr(0, colon)));
    if (mapping_names_.contains(name) || bindings_.contains(name)) {
      throw ParseError("name '" + name + "' is already defined");
    }
    std::map<std::string, std::string> declared;
    std::string_view body = trim(rest.substr(colon + 1));
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view entry = trim(body.substr(0, comma));
      const auto arrow = entry.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError("expected '<curve> -> <curve>' in mapping '" + name + "'");
      }
      const std::string from(trim(entry.substr(0, arrow)));
      const std::string to(trim(entry.substr(arrow + 2)));
      if (!is_identifier(from) || !is_identifier(to)) {
        throw ParseError("invalid curve name in mapping '" + name + "'");
      }
      if (!declared.emplace(from, to).second) {
        throw ParseError("curve '" + from + "' mapped twice by '" + name + "'");
      }
      body = comma == std::string_view::npos ? std::string_view{} : trim(body.substr(comma + 1));
    }
    script_.mappings.emplace_back(name, std::move(declared));
    mapping_names_.insert(name);
  }

  // let <name> = <word>
  void let(std::string_view rest) {
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'let <name> = <twist word>'");
    }
    const std::string name(trim(rest.substr(0, eq)));
    if (!is_identifier(name)) {
      throw ParseError("invalid binding name '" + name + "'");
    }
    if (mapping_names_.contains(name) || bindings_.contains(name)) {
      throw ParseError("name '" + name + "' is already defined");
    }
    TwistWord value = word(rest.substr(eq + 1));
    bindings_.emplace(name, value);
    script_.bindings.emplace_back(name, std::move(value));
  }

  TwistWord word(std::string_view text) const {
    if (trim(text).empty()) {
      throw ParseError("expected a twist word");
    }
    return TwistWord::parse(text, bindings_, mapping_names_);
  }

  TwistLetter letter(const std::string& token) const {
    const TwistWord w = TwistWord::parse(token, {}, mapping_names_);
    if (w.size() != 1) {
      throw ParseError("expected a single symbol, got '" + token + "'");
    }
    return w[0];
  }

  // step <move> @<index> [args]
  Move step(std::string_view rest) const {
    const auto tokens = split_ws(rest);
    if (tokens.size() < 2) {
      throw ParseError("expected 'step <move> @<index> [<args>]'");
    }
    const auto kind = parse_move_kind(tokens[0]);
    if (!kind) {
      throw ParseError("unknown move '" + tokens[0] + "'");
    }
    Move move;
    move.kind = *kind;
    move.position = index(tokens[1]);
    const std::vector<std::string> args(tokens.begin() + 2, tokens.end());
    auto expect_args = [&](std::size_t n) {
      if (args.size() != n) {
        throw ParseError(std::string(to_string(move.kind)) + " takes " + std::to_string(n) + " argument(s)");
      }
    };
    switch (move.kind) {
      case MoveKind::free_insert:
      case MoveKind::conjugate_equation:
        expect_args(1);
        move.operand = letter(args[0]);
        break;
      case MoveKind::free_cancel:
      case MoveKind::braid:
      case MoveKind::commute:
      case MoveKind::chain_substitute:
        expect_args(0);
        break;
      case MoveKind::definition_substitute:
        if (args.size() == 1 && args[0] == "unfold") {
          move.direction = Direction::unfold;
        } else if (args.size() == 2 && args[0] == "fold" && is_identifier(args[1])) {
          move.direction = Direction::fold;
          move.curve = args[1];
        } else {
          throw ParseError("definition-substitute takes 'unfold' or 'fold <curve>'");
        }
        break;
      case MoveKind::twist_naturality:
        if (args.size() == 1 && args[0] == "fold") {
          move.direction = Direction::fold;
        } else if (args.size() == 2 && args[0] == "unfold") {
          move.direction = Direction::unfold;
          move.operand = letter(args[1]);
          if (move.operand->symbol.is_twist()) {
            throw ParseError("twist-naturality unfold takes a mapping symbol");
          }
        } else {
          throw ParseError("twist-naturality takes 'fold' or 'unfold <mapping>'");
        }
        break;
    }
    return move;
  }

  static std::size_t index(const std::string& token) {
    if (token.size() < 2 || token[0] != '@') {
      throw ParseError("expected '@<index>', got '" + token + "'");
    }
    std::size_t value = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i])) || value > 100'000'000) {
        throw ParseError("invalid index '" + token + "'");
      }
      value = value * 10 + static_cast<std::size_t>(token[i] - '0');
    }
    return value;
  }

  std::string text_;
  std::size_t line_ = 0;
  ProofScript script_;
  std::map<std::string, TwistWord> bindings_;
  std::set<std::string> mapping_names_;
  bool have_source_ = false;
  bool have_claim_ = false;
};

}  // namespace

std::map<std::string, MappingSymbol> ProofScript::mapping_table() const {
  std::map<std::string, MappingSymbol> out;
  for (const MappingSymbol& m : mappings) {
    out.emplace(m.name(), m);
  }
  return out;
}

ProofScript parse_proof_script(std::string_view text) { return ScriptParser(text).parse(); }

std::string format_proof_script(const ProofScript& script) {
  std::string out;
  for (const MappingSymbol& m : script.mappings) {
    out += "mapping " + m.name() + ":";
    bool first = true;
    for (const auto& [from, to] : m.declared_mapping()) {
      out += (first ? " " : ", ") + from + " -> " + to;
      first = false;
    }
    out += "\n";
  }
  for (const auto& [name, value] : script.bindings) {
    out += "let " + name + " = " + value.to_string() + "\n";
  }
  out += "source " + script.source.to_string() + "\n";
  for (const Move& move : script.steps) {
    out += "step " + move.to_string() + "\n";
  }
  out += "claim " + script.claim.to_string() + "\n";
  return out;
}

DerivationReport check_script(const ProofScript& script, const CurveConfiguration& config) {
  const auto mappings = script.mapping_table();
  const MoveContext context{config, mappings, &script.source};
  DerivationReport report;
  report.words.push_back(script.source);
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      report.words.push_back(apply_move(report.words.back(), script.steps[i], context));
    } catch (const MoveError& e) {
      report.failure = DerivationFailure{i, e.code(), script.steps[i].to_string() + ": " + e.what()};
      return report;
    }
  }
  if (report.words.back() != script.claim) {
    report.failure = DerivationFailure{script.steps.size(), "claim-mismatch",
                                       "derived '" + report.words.back().to_string() + "' but the claim is '" +
                                           script.claim.to_string() + "'"};
    return report;
  }
  report.accepted = true;
  return report;
}

std::string_view theorem3_script_text() {
  static constexpr std::string_view text =
#include "theorem3_script.inc"
      ;
  return text;
}

ProofScript theorem3_script() { return parse_proof_script(theorem3_script_text()); }

}  // namespace scltwist
