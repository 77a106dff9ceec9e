#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scltwist/twist_word.hpp"

namespace scltwist {

/// Unordered pair of curve names, stored sorted.
class CurvePair {
 public:
  CurvePair(std::string a, std::string b);

  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

  friend bool operator==(const CurvePair&, const CurvePair&) = default;
  friend auto operator<=>(const CurvePair&, const CurvePair&) = default;

 private:
  std::string first_;
  std::string second_;
};

struct ChainRelation {
  TwistWord left;
  TwistWord right;
};

/// curve = by(image_of), so t_curve = by · t_image_of · by^-1.
struct CurveDefinition {
  std::string image_of;
  TwistWord by;
};

/// Curves and the relation tables a proof script may cite.
class CurveConfiguration {
 public:
  /// Validates: pairs name registered, distinct curves; disjoint and braid
  /// pairs do not overlap; definitions refer to registered curves.
  CurveConfiguration(std::set<std::string> curves, std::set<CurvePair> disjoint_pairs,
                     std::set<CurvePair> braid_pairs, std::vector<ChainRelation> chain_relations,
                     std::map<std::string, CurveDefinition> definitions);

  /// The 3-chain a1,a2,a3 with boundary curves a4,a5, the chain relation
  /// t4 t5 = (t1 t2 t3)^4 and alpha = t2^2(a3), beta = t2^3(a3).
  static CurveConfiguration standard();

  CurveConfiguration without_chain_relations() const;

  const std::set<std::string>& curves() const { return curves_; }
  const std::set<CurvePair>& disjoint_pairs() const { return disjoint_; }
  const std::set<CurvePair>& braid_pairs() const { return braid_; }
  const std::vector<ChainRelation>& chain_relations() const { return chains_; }
  const std::map<std::string, CurveDefinition>& definitions() const { return definitions_; }

  bool has_curve(const std::string& c) const { return curves_.contains(c); }
  bool are_disjoint(const std::string& a, const std::string& b) const;
  bool are_braided(const std::string& a, const std::string& b) const;

  /// by · t_image_of^sign · by^-1 for a defined curve; nullopt otherwise.
  std::optional<TwistWord> definition_expansion(const std::string& curve, int sign = 1) const;

 private:
  std::set<std::string> curves_;
  std::set<CurvePair> disjoint_;
  std::set<CurvePair> braid_;
  std::vector<ChainRelation> chains_;
  std::map<std::string, CurveDefinition> definitions_;
};

/// A formal mapping class known only through the curves it is declared to
/// carry to other curves.
class MappingSymbol {
 public:
  /// Throws InvalidArgument if the name clashes with twist syntax or the
  /// declaration is not injective.
  MappingSymbol(std::string name, std::map<std::string, std::string> declared_mapping);

  const std::string& name() const { return name_; }
  const std::map<std::string, std::string>& declared_mapping() const { return mapping_; }

  std::optional<std::string> image_of(const std::string& curve) const;
  std::optional<std::string> preimage_of(const std::string& curve) const;

  friend bool operator==(const MappingSymbol&, const MappingSymbol&) = default;

 private:
  std::string name_;
  std::map<std::string, std::string> mapping_;
};

}  // namespace scltwist
