#include "scltwist/curve_configuration.hpp"

#include <algorithm>
#include <cctype>

#include "scltwist/errors.hpp"

namespace scltwist {

CurvePair::CurvePair(std::string a, std::string b) {
  if (a == b) {
    throw InvalidArgument("a curve pair needs two distinct curves, got '" + a + "' twice");
  }
  if (b < a) {
    std::swap(a, b);
  }
  first_ = std::move(a);
  second_ = std::move(b);
}

CurveConfiguration::CurveConfiguration(std::set<std::string> curves, std::set<CurvePair> disjoint_pairs,
                                       std::set<CurvePair> braid_pairs, std::vector<ChainRelation> chain_relations,
                                       std::map<std::string, CurveDefinition> definitions)
    : curves_(std::move(curves)),
      disjoint_(std::move(disjoint_pairs)),
      braid_(std::move(braid_pairs)),
      chains_(std::move(chain_relations)),
      definitions_(std::move(definitions)) {
  for (const std::string& c : curves_) {
    if (!is_identifier(c)) {
      throw InvalidArgument("invalid curve name '" + c + "'");
    }
  }
  auto check_pairs = [&](const std::set<CurvePair>& pairs, const char* what) {
    for (const CurvePair& p : pairs) {
      if (!has_curve(p.first()) || !has_curve(p.second())) {
        throw InvalidArgument(std::string(what) + " pair {" + p.first() + "," + p.second() +
                              "} names an unregistered curve");
      }
    }
  };
  check_pairs(disjoint_, "disjoint");
  check_pairs(braid_, "braid");
  for (const CurvePair& p : braid_) {
    if (disjoint_.contains(p)) {
      throw InvalidArgument("pair {" + p.first() + "," + p.second() + "} is both disjoint and braided");
    }
  }
  for (const auto& [curve, def] : definitions_) {
    if (!has_curve(curve) || !has_curve(def.image_of)) {
      throw InvalidArgument("definition of '" + curve + "' refers to an unregistered curve");
    }
  }
}

CurveConfiguration CurveConfiguration::standard() {
  std::set<std::string> curves{"a1", "a2", "a3", "a4", "a5", "alpha", "beta"};
  std::set<CurvePair> disjoint{{"a1", "a3"}, {"a4", "a5"}};
  for (const char* boundary : {"a4", "a5"}) {
    for (const char* inner : {"a1", "a2", "a3"}) {
      disjoint.emplace(boundary, inner);
    }
  }
  std::set<CurvePair> braid{{"a1", "a2"}, {"a2", "a3"}};
  std::vector<ChainRelation> chains{{TwistWord::parse("t4 t5"), TwistWord::parse("(t1 t2 t3)^4")}};
  std::map<std::string, CurveDefinition> definitions{
      {"alpha", {"a3", TwistWord::parse("t2^2")}},
      {"beta", {"a3", TwistWord::parse("t2^3")}},
  };
  return CurveConfiguration(std::move(curves), std::move(disjoint), std::move(braid), std::move(chains),
                            std::move(definitions));
}

CurveConfiguration CurveConfiguration::without_chain_relations() const {
  return CurveConfiguration(curves_, disjoint_, braid_, {}, definitions_);
}

bool CurveConfiguration::are_disjoint(const std::string& a, const std::string& b) const {
  return a != b && disjoint_.contains(CurvePair(a, b));
}

bool CurveConfiguration::are_braided(const std::string& a, const std::string& b) const {
  return a != b && braid_.contains(CurvePair(a, b));
}

std::optional<TwistWord> CurveConfiguration::definition_expansion(const std::string& curve, int sign) const {
  const auto it = definitions_.find(curve);
  if (it == definitions_.end()) {
    return std::nullopt;
  }
  const CurveDefinition& def = it->second;
  return def.by * TwistWord{twist_letter(def.image_of, sign)} * def.by.inverse();
}

MappingSymbol::MappingSymbol(std::string name, std::map<std::string, std::string> declared_mapping)
    : name_(std::move(name)), mapping_(std::move(declared_mapping)) {
  const bool twist_like =
      name_.starts_with("t_") ||
      (name_.size() > 1 && name_.front() == 't' &&
       std::all_of(name_.begin() + 1, name_.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }));
  if (!is_identifier(name_) || twist_like || std::isdigit(static_cast<unsigned char>(name_.front()))) {
    throw InvalidArgument("invalid mapping symbol name '" + name_ + "'");
  }
  std::set<std::string> images;
  for (const auto& [from, to] : mapping_) {
    if (!images.insert(to).second) {
      throw InvalidArgument("mapping '" + name_ + "' is not injective: two curves map to '" + to + "'");
    }
  }
}

std::optional<std::string> MappingSymbol::image_of(const std::string& curve) const {
  const auto it = mapping_.find(curve);
  if (it == mapping_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::string> MappingSymbol::preimage_of(const std::string& curve) const {
  for (const auto& [from, to] : mapping_) {
    if (to == curve) {
      return from;
    }
  }
  return std::nullopt;
}

}  // namespace scltwist
