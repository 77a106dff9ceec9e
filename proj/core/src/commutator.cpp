#include "scltwist/commutator.hpp"

#include <map>
#include <string>

#include "scltwist/errors.hpp"

namespace scltwist {

namespace {

void require_positive(std::int64_t k, const char* what) {
  if (k < 1) {
    throw InvalidArgument(std::string(what) + " requires k >= 1, got " + std::to_string(k));
  }
}

CommutatorFactor substitute_factor(const CommutatorFactor& f, const std::map<std::string, Word>& images) {
  return {substitute(f.conjugator, images), substitute(f.left, images), substitute(f.right, images)};
}

}  // namespace

Word CommutatorExpression::value() const {
  Word product;
  for (const CommutatorFactor& factor : factors) {
    product = product * factor.value();
  }
  return product;
}

bool verify_expression(const CommutatorExpression& expression) {
  return expression.value() == expression.target;
}

std::int64_t culler_factor_count(std::int64_t k) {
  require_positive(k, "culler_factor_count");
  return k / 2 + 1;
}

std::int64_t bavard_factor_count(std::int64_t r, std::int64_t k) {
  require_positive(k, "bavard_factor_count");
  if (r < 1) {
    throw InvalidArgument("bavard_factor_count requires r >= 1");
  }
  return k * (r - 1) + k / 2 + 1;
}

std::vector<Word> shuffle_expand(const Word& u, const Word& v, std::int64_t k) {
  require_positive(k, "shuffle_expand");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  Word u_power;
  for (std::int64_t i = 1; i <= k; ++i) {
    u_power = u_power * u;
    out.push_back(conjugate(v, u_power));
  }
  out.push_back(u_power);
  return out;
}

CommutatorExpression culler_expand(const Word& u, const Word& v, std::int64_t k) {
  require_positive(k, "culler_expand");
  CommutatorExpression expression;
  expression.target = commutator(u, v).power(k);

  const std::int64_t odd = (k % 2 == 1) ? k : k - 1;
  if (odd == 1) {
    expression.factors.push_back({Word(), u, v});
  } else {
    const std::map<std::string, Word> images{{"a", u}, {"b", v}};
    for (const CommutatorFactor& f : detail::odd_power_template(odd)) {
      expression.factors.push_back(substitute_factor(f, images));
    }
  }
  if (odd != k) {
    expression.factors.push_back({Word(), u, v});
  }

  if (static_cast<std::int64_t>(expression.factors.size()) != culler_factor_count(k) ||
      !verify_expression(expression)) {
    throw ExpansionNotFound("no certified expansion of [u,v]^" + std::to_string(k));
  }
  return expression;
}

CommutatorExpression bavard_expand(std::span<const std::pair<Word, Word>> pairs, std::int64_t k) {
  require_positive(k, "bavard_expand");
  if (pairs.empty()) {
    throw InvalidArgument("bavard_expand requires at least one commutator pair");
  }
  if (pairs.size() == 1) {
    return culler_expand(pairs[0].first, pairs[0].second, k);
  }

  CommutatorExpression expression;
  Word base;
  for (const auto& [a, b] : pairs) {
    base = base * commutator(a, b);
  }
  expression.target = base.power(k);

  if (k == 1) {
    for (const auto& [a, b] : pairs) {
      expression.factors.push_back({Word(), a, b});
    }
  } else {
    // (uv)^k with u = [u_1,v_1] and v the remaining commutators: each
    // u^i v u^-i splits into r-1 conjugated commutators, and u^k goes to Culler.
    const Word u = commutator(pairs[0].first, pairs[0].second);
    Word u_power;
    for (std::int64_t i = 1; i <= k; ++i) {
      u_power = u_power * u;
      for (std::size_t j = 1; j < pairs.size(); ++j) {
        expression.factors.push_back({u_power, pairs[j].first, pairs[j].second});
      }
    }
    auto tail = culler_expand(pairs[0].first, pairs[0].second, k);
    expression.factors.insert(expression.factors.end(), tail.factors.begin(), tail.factors.end());
  }

  const auto r = static_cast<std::int64_t>(pairs.size());
  if (static_cast<std::int64_t>(expression.factors.size()) != bavard_factor_count(r, k) ||
      !verify_expression(expression)) {
    throw ExpansionNotFound("no certified expansion of the " + std::to_string(r) + "-commutator product to the power " +
                            std::to_string(k));
  }
  return expression;
}

}  // namespace scltwist
