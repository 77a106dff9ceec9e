#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scltwist/rational.hpp"

namespace scltwist {

/// Bounds on a hypothetical Lefschetz fibration of genus g whose monodromy
/// has n vanishing cycles, rn of them nonseparating.
struct FibrationInvariants {
  std::int64_t g = 0;
  Rational r;
  std::int64_t n = 0;
  std::int64_t rn = 0;
  std::int64_t chi = 0;                  // 4(g-1)(rn-1)+n
  std::int64_t b1_upper = 0;             // 2g+2rn
  std::int64_t b2minus_lower = 0;        // n-1
  std::int64_t b2plus_upper = 0;         // 4grn+3
  std::int64_t sigma_upper = 0;          // 4grn-n+4
  std::int64_t c1sq_li_lower = 0;        // 2(g-1)(rn-1), assumed (Li)
  std::int64_t contradiction_value = 0;  // ((18g-6)r-1)n+18-6g
  std::int64_t b2_upper_via_chi = 0;     // chi+2 b1_upper-2
  std::int64_t c1sq_upper = 0;           // 3 sigma_upper+2 chi
  /// b2minus_lower + b2plus_upper == b2_upper_via_chi
  bool b2_consistent = false;
  /// c1sq_upper - c1sq_li_lower == contradiction_value
  bool c1sq_consistent = false;
};

/// Throws InvalidArgument unless g >= 2, r > 0, n >= 1 and rn is an integer;
/// ArithmeticOverflow past int64.
FibrationInvariants invariants_report(std::int64_t g, const Rational& r, std::int64_t n);

struct ContradictionSearch {
  std::optional<std::int64_t> n;
  /// (18g-6)r-1 >= 0: the value is never negative for large n.
  bool impossible = false;
};

/// Least n with rn integral and contradiction_value < 0.
ContradictionSearch find_contradiction_n(std::int64_t g, const Rational& r);

struct IntersectionMatrix {
  std::vector<std::vector<std::int64_t>> entries;
  /// Leading principal minors of orders 1..m.
  std::vector<std::int64_t> minors;
  bool positive_definite = false;
};

/// The m x m tridiagonal matrix with 2 on the diagonal and 1 beside it.
/// Throws InvalidArgument unless 1 <= m <= kMaxIntersectionSize.
IntersectionMatrix intersection_matrix(std::int64_t m);

inline constexpr std::int64_t kMaxIntersectionSize = 1000;

}  // namespace scltwist
