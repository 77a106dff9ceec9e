#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "scltwist/rational.hpp"

namespace scltwist {

enum class CurveKind { nonseparating, separating, bounds_punctured_disc };

std::string_view to_string(CurveKind kind);
/// "nonseparating", "separating", "bounds-punctured-disc".
std::optional<CurveKind> parse_curve_kind(std::string_view text);

struct SurfaceSpec {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  std::int64_t boundary = 0;
  CurveKind curve = CurveKind::nonseparating;
  /// Genus of the smaller side of a separating curve.
  std::int64_t side_genus = 0;

  bool closed() const { return punctures == 0 && boundary == 0; }
};

struct SclBoundReport {
  std::string element;  // "t_a", "t_a^10", "t_a^5"
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<std::int64_t> commutator_power_threshold;
  bool positive = false;
};

/// Throws OutOfHypotheses when no bound applies and InvalidArgument for an
/// inconsistent surface description.
SclBoundReport bound_report(const SurfaceSpec& surface);

/// k(r-1)+floor(k/2)+1 commutators for (prod of r commutators)^k.
/// Throws InvalidArgument unless r, k >= 1.
std::int64_t cl_upper(std::int64_t r, std::int64_t k);

struct SclEstimate {
  Rational estimate;
  bool subadditive = false;
};

/// Minimum of c_n / n over the points, and whether c_{n+m} <= c_n + c_m for
/// every n, m, n+m present. Throws InvalidArgument on empty input, repeated or
/// nonpositive n, or negative c_n.
SclEstimate scl_from_counts(std::span<const std::pair<std::int64_t, std::int64_t>> counts);

/// (1/(10 k)) times the lower bound for scl(t_a^10) on the closed surface of
/// genus g+q. Throws OutOfHypotheses.
Rational growth_rate_lower(std::int64_t k_gen, const SurfaceSpec& surface);

}  // namespace scltwist
