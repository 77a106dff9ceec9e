#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scltwist/curve_configuration.hpp"
#include "scltwist/twist_word.hpp"
#include "scltwist/word.hpp"

namespace scltwist {

/// Integer action on the abelianization; entry (i, j) is the exponent of
/// basis element i in the image of basis element j.
class HomologyMatrix {
 public:
  explicit HomologyMatrix(std::vector<std::vector<std::int64_t>> entries);
  static HomologyMatrix identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  std::int64_t determinant() const;
  /// (M - I)^2 = 0 and rank(M - I) <= 1.
  bool is_transvection() const;

  friend HomologyMatrix operator*(const HomologyMatrix& a, const HomologyMatrix& b);
  friend bool operator==(const HomologyMatrix&, const HomologyMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> entries_;
};

/// An endomorphism of the free group on a fixed ordered basis, given by the
/// reduced images of the basis elements.
class Automorphism {
 public:
  Automorphism(std::vector<std::string> basis, std::map<std::string, Word> images);
  static Automorphism identity(std::vector<std::string> basis);

  const std::vector<std::string>& basis() const { return basis_; }
  const std::map<std::string, Word>& images() const { return images_; }
  const Word& image(const std::string& generator) const;

  Word apply(const Word& w) const;
  /// (*this) ∘ inner: first inner, then this.
  Automorphism compose(const Automorphism& inner) const;
  bool is_identity() const;
  HomologyMatrix homology() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<std::string> basis_;
  std::map<std::string, Word> images_;
};

/// Twists about a1..a5 acting on the free group {x, y, z, w}: x = x1 x2,
/// y = x2 x3, z = x3 x4 from the double cover of the four-punctured disc and
/// a band loop w joining the two boundary curves. Composite curves (alpha,
/// beta) are evaluated through their definitions.
class TwistModel {
 public:
  static TwistModel standard();

  /// Replaces the action of one generator twist; used to build broken models.
  TwistModel with_generator(const std::string& curve, Automorphism twist, Automorphism inverse) const;

  const std::vector<std::string>& basis() const { return basis_; }
  const CurveConfiguration& configuration() const { return config_; }
  std::vector<std::string> generator_curves() const;

  /// Throws Error("unknown-curve") outside a1..a5.
  const Automorphism& twist(const std::string& curve) const;
  const Automorphism& twist_inverse(const std::string& curve) const;

  /// Composition in word order. Throws Error("unresolved-symbol") on a
  /// mapping symbol and Error("unknown-curve") on an unmodelled curve.
  Automorphism evaluate(const TwistWord& word) const;
  bool equal_in_rep(const TwistWord& lhs, const TwistWord& rhs) const;

 private:
  TwistModel(std::vector<std::string> basis, std::map<std::string, std::pair<Automorphism, Automorphism>> generators,
             CurveConfiguration config);

  Automorphism evaluate_letter(const TwistLetter& letter, int depth) const;
  Automorphism evaluate_word(const TwistWord& word, int depth) const;

  std::vector<std::string> basis_;
  std::map<std::string, std::pair<Automorphism, Automorphism>> generators_;
  CurveConfiguration config_;
};

/// The standard model's twist about a1..a5.
Automorphism twist_automorphism(const std::string& curve);

struct ModelCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Inverses, nontriviality, every registered braid and disjoint pair, the
/// chain relation, the displayed equalities and unipotent homology.
std::vector<ModelCheck> validate_model(const TwistModel& model = TwistModel::standard());

}  // namespace scltwist
