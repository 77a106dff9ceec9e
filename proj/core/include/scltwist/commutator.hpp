#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scltwist/word.hpp"

namespace scltwist {

/// conjugator · [left, right] · conjugator^-1
struct CommutatorFactor {
  Word conjugator;
  Word left;
  Word right;

  Word value() const { return conjugate(commutator(left, right), conjugator); }

  friend bool operator==(const CommutatorFactor&, const CommutatorFactor&) = default;
};

/// A claimed factorization of `target` into conjugated commutators.
struct CommutatorExpression {
  std::vector<CommutatorFactor> factors;
  Word target;

  /// Reduced product of the factors; the empty product is the identity.
  Word value() const;

  friend bool operator==(const CommutatorExpression&, const CommutatorExpression&) = default;
};

/// True iff the reduced product of the factors equals the reduced target.
bool verify_expression(const CommutatorExpression& expression);

/// Factors of (uv)^k = (u v u^-1)(u^2 v u^-2)...(u^k v u^-k) u^k, in order;
/// k + 1 words. Throws InvalidArgument for k < 1.
std::vector<Word> shuffle_expand(const Word& u, const Word& v, std::int64_t k);

/// [u,v]^k as exactly floor(k/2)+1 certified commutators. Throws
/// InvalidArgument for k < 1 and ExpansionNotFound if the construction does not
/// certify.
CommutatorExpression culler_expand(const Word& u, const Word& v, std::int64_t k);

/// (prod_i [u_i,v_i])^k as exactly k(r-1)+floor(k/2)+1 certified commutators.
CommutatorExpression bavard_expand(std::span<const std::pair<Word, Word>> pairs, std::int64_t k);

/// floor(k/2)+1
std::int64_t culler_factor_count(std::int64_t k);

/// k(r-1)+floor(k/2)+1
std::int64_t bavard_factor_count(std::int64_t r, std::int64_t k);

namespace detail {

/// [a,b]^n over the generators "a","b" for odd n >= 3, read off the boundary
/// of an n-sheeted cover of the one-holed torus with connected boundary.
/// Returns (n+1)/2 factors whose product is exactly [a,b]^n.
std::vector<CommutatorFactor> odd_power_template(std::int64_t n);

}  // namespace detail

}  // namespace scltwist
