#include "scltwist/pi1_action.hpp"

#include <utility>

#include "scltwist/errors.hpp"

namespace scltwist {

namespace {

using Images = std::map<std::string, Word>;

const std::vector<std::string> kBasis{"x", "y", "z", "w"};
constexpr int kMaxDefinitionDepth = 8;

Automorphism model_map(const std::map<std::string, std::string>& formulas) {
  Images images;
  for (const std::string& b : kBasis) {
    const auto it = formulas.find(b);
    images.emplace(b, it == formulas.end() ? Word::generator(b) : Word::parse(it->second));
  }
  return Automorphism(kBasis, std::move(images));
}

std::string pair_name(const CurvePair& p) { return "{" + p.first() + "," + p.second() + "}"; }

}  // namespace

HomologyMatrix::HomologyMatrix(std::vector<std::vector<std::int64_t>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) {
      throw InvalidArgument("homology matrix must be square");
    }
  }
}

HomologyMatrix HomologyMatrix::identity(std::size_t n) {
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    e[i][i] = 1;
  }
  return HomologyMatrix(std::move(e));
}

std::int64_t HomologyMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  auto m = entries_;
  const std::size_t n = m.size();
  if (n == 0) {
    return 1;
  }
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) {
        ++r;
      }
      if (r == n) {
        return 0;
      }
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool HomologyMatrix::is_transvection() const {
  const std::size_t n = size();
  auto d = entries_;
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] -= 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t sq = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sq += d[i][k] * d[k][j];
      }
      if (sq != 0) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          if (d[i][j] * d[k][l] - d[i][l] * d[k][j] != 0) {
            return false;
          }
        }
      }
    }
  }
  return determinant() == 1;
}

HomologyMatrix operator*(const HomologyMatrix& a, const HomologyMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw InvalidArgument("homology matrix size mismatch");
  }
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i][j] += a.entries_[i][k] * b.entries_[k][j];
      }
    }
  }
  return HomologyMatrix(std::move(e));
}

Automorphism::Automorphism(std::vector<std::string> basis, std::map<std::string, Word> images)
    : basis_(std::move(basis)), images_(std::move(images)) {
  if (images_.size() != basis_.size()) {
    throw InvalidArgument("automorphism needs exactly one image per basis element");
  }
  for (const std::string& b : basis_) {
    if (!images_.contains(b)) {
      throw InvalidArgument("automorphism has no image for basis element '" + b + "'");
    }
  }
}

Automorphism Automorphism::identity(std::vector<std::string> basis) {
  Images images;
  for (const std::string& b : basis) {
    images.emplace(b, Word::generator(b));
  }
  return Automorphism(std::move(basis), std::move(images));
}

const Word& Automorphism::image(const std::string& generator) const {
  const auto it = images_.find(generator);
  if (it == images_.end()) {
    throw InvalidArgument("'" + generator + "' is not a basis element");
  }
  return it->second;
}

Word Automorphism::apply(const Word& w) const { return substitute(w, images_); }

Automorphism Automorphism::compose(const Automorphism& inner) const {
  if (inner.basis_ != basis_) {
    throw InvalidArgument("cannot compose automorphisms on different bases");
  }
  Images images;
  for (const auto& [b, img] : inner.images_) {
    images.emplace(b, apply(img));
  }
  return Automorphism(basis_, std::move(images));
}

bool Automorphism::is_identity() const {
  for (const auto& [b, img] : images_) {
    if (img != Word::generator(b)) {
      return false;
    }
  }
  return true;
}

HomologyMatrix Automorphism::homology() const {
  const std::size_t n = basis_.size();
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto sums = exponent_sums(image(basis_[j]));
    for (std::size_t i = 0; i < n; ++i) {
      const auto it = sums.find(basis_[i]);
      e[i][j] = it == sums.end() ? 0 : it->second;
    }
  }
  return HomologyMatrix(std::move(e));
}

TwistModel::TwistModel(std::vector<std::string> basis,
                       std::map<std::string, std::pair<Automorphism, Automorphism>> generators,
                       CurveConfiguration config)
    : basis_(std::move(basis)), generators_(std::move(generators)), config_(std::move(config)) {}

TwistModel TwistModel::standard() {
  // c = x z is the loop around the basepoint boundary a4;
  // d = y z^-1 y^-1 x^-1 closes the band loop w around a5.
  const std::string c = "(x z)";
  const std::string ci = "(x z)^-1";
  std::map<std::string, std::pair<Automorphism, Automorphism>> gens;
  gens.emplace("a1", std::pair{model_map({{"y", "x y"}, {"w", "x w"}}),
                               model_map({{"y", "x^-1 y"}, {"w", "x^-1 w"}})});
  gens.emplace("a2", std::pair{model_map({{"x", "x y^-1"}, {"z", "y z"}}),
                               model_map({{"x", "x y"}, {"z", "y^-1 z"}})});
  gens.emplace("a3", std::pair{model_map({{"y", "y z^-1"}}), model_map({{"y", "y z"}})});
  gens.emplace("a4", std::pair{model_map({{"x", c + " x " + ci},
                                          {"y", c + " y " + ci},
                                          {"z", c + " z " + ci},
                                          {"w", c + " w"}}),
                               model_map({{"x", ci + " x " + c},
                                          {"y", ci + " y " + c},
                                          {"z", ci + " z " + c},
                                          {"w", ci + " w"}})});
  gens.emplace("a5", std::pair{model_map({{"w", "(y z^-1 y^-1 x^-1)^-1 w"}}),
                               model_map({{"w", "y z^-1 y^-1 x^-1 w"}})});
  return TwistModel(kBasis, std::move(gens), CurveConfiguration::standard());
}

TwistModel TwistModel::with_generator(const std::string& curve, Automorphism twist, Automorphism inverse) const {
  if (!generators_.contains(curve)) {
    throw Error("unknown-curve", "no generator twist about '" + curve + "'");
  }
  TwistModel out = *this;
  out.generators_.insert_or_assign(curve, std::pair{std::move(twist), std::move(inverse)});
  return out;
}

std::vector<std::string> TwistModel::generator_curves() const {
  std::vector<std::string> out;
  for (const auto& [curve, pair] : generators_) {
    out.push_back(curve);
  }
  return out;
}

const Automorphism& TwistModel::twist(const std::string& curve) const {
  const auto it = generators_.find(curve);
  if (it == generators_.end()) {
    throw Error("unknown-curve", "the model has no twist about '" + curve + "'");
  }
  return it->second.first;
}

const Automorphism& TwistModel::twist_inverse(const std::string& curve) const {
  const auto it = generators_.find(curve);
  if (it == generators_.end()) {
    throw Error("unknown-curve", "the model has no twist about '" + curve + "'");
  }
  return it->second.second;
}

Automorphism TwistModel::evaluate_letter(const TwistLetter& letter, int depth) const {
  if (!letter.symbol.is_twist()) {
    throw Error("unresolved-symbol", "mapping symbol '" + letter.symbol.name + "' has no action in the model");
  }
  const std::string& curve = letter.symbol.name;
  if (generators_.contains(curve)) {
    return letter.sign > 0 ? twist(curve) : twist_inverse(curve);
  }
  const auto expansion = config_.definition_expansion(curve, letter.sign);
  if (!expansion || depth >= kMaxDefinitionDepth) {
    throw Error("unknown-curve", "the model has no twist about '" + curve + "'");
  }
  return evaluate_word(*expansion, depth + 1);
}

Automorphism TwistModel::evaluate_word(const TwistWord& word, int depth) const {
  Automorphism out = Automorphism::identity(basis_);
  for (const TwistLetter& l : word.letters()) {
    out = out.compose(evaluate_letter(l, depth));
  }
  return out;
}

Automorphism TwistModel::evaluate(const TwistWord& word) const { return evaluate_word(word, 0); }

bool TwistModel::equal_in_rep(const TwistWord& lhs, const TwistWord& rhs) const {
  return evaluate(lhs) == evaluate(rhs);
}

Automorphism twist_automorphism(const std::string& curve) {
  static const TwistModel model = TwistModel::standard();
  return model.twist(curve);
}

std::vector<ModelCheck> validate_model(const TwistModel& model) {
  std::vector<ModelCheck> out;
  const CurveConfiguration& config = model.configuration();
  const Automorphism id = Automorphism::identity(model.basis());
  std::vector<std::pair<TwistWord, TwistWord>> relations;

  auto relation = [&](std::string name, const TwistWord& lhs, const TwistWord& rhs) {
    const Automorphism l = model.evaluate(lhs);
    const Automorphism r = model.evaluate(rhs);
    const bool ok = l == r;
    out.push_back({std::move(name), ok, lhs.to_string() + (ok ? " = " : " != ") + rhs.to_string()});
    relations.emplace_back(lhs, rhs);
  };

  for (const std::string& curve : model.generator_curves()) {
    const Automorphism& t = model.twist(curve);
    const Automorphism& ti = model.twist_inverse(curve);
    const bool inv = t.compose(ti) == id && ti.compose(t) == id;
    out.push_back({"inverse " + curve, inv, inv ? "twist and inverse compose to the identity" : "not inverse"});
    const bool nontrivial = !t.is_identity();
    out.push_back({"nontrivial " + curve, nontrivial, nontrivial ? "acts nontrivially" : "acts as the identity"});
  }
  for (const CurvePair& p : config.braid_pairs()) {
    const TwistLetter a = twist_letter(p.first());
    const TwistLetter b = twist_letter(p.second());
    relation("braid " + pair_name(p), TwistWord{a, b, a}, TwistWord{b, a, b});
  }
  for (const CurvePair& p : config.disjoint_pairs()) {
    const TwistLetter a = twist_letter(p.first());
    const TwistLetter b = twist_letter(p.second());
    relation("commute " + pair_name(p), TwistWord{a, b}, TwistWord{b, a});
  }
  for (const ChainRelation& rel : config.chain_relations()) {
    relation("chain", rel.left, rel.right);
  }
  relation("displayed chain form", TwistWord::parse("t4 t5"),
           TwistWord::parse("t1 t_alpha t2^4 t1 t2^-1 t_beta t2^-1 t2^6"));
  relation("displayed equality", TwistWord::parse("t4 t_alpha^-1 t5 t1^-1"),
           TwistWord::parse("t2^4 (t1 t2^-1 t_beta t2^-1) t2^6"));

  for (const std::string& curve : config.curves()) {
    const HomologyMatrix m = model.evaluate(TwistWord{twist_letter(curve)}).homology();
    const bool ok = m.is_transvection();
    out.push_back({"unipotent homology " + curve, ok,
                   "det " + std::to_string(m.determinant()) + (ok ? ", transvection" : ", not a transvection")});
  }

  bool consistent = true;
  std::string detail = "equal actions have equal homology";
  for (const auto& [lhs, rhs] : relations) {
    const Automorphism l = model.evaluate(lhs);
    const Automorphism r = model.evaluate(rhs);
    if (l == r && l.homology() != r.homology()) {
      consistent = false;
      detail = "homology differs for " + lhs.to_string() + " = " + rhs.to_string();
    }
  }
  out.push_back({"homology consistency", consistent, detail});
  return out;
}

}  // namespace scltwist
