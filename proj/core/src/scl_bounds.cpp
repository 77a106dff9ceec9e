#include "scltwist/scl_bounds.hpp"

#include <map>

#include "scltwist/detail/checked.hpp"
#include "scltwist/errors.hpp"

namespace scltwist {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

// 18g - 6
std::int64_t main_denominator(std::int64_t g) { return checked_sub(checked_mul(18, g), 6); }

void check_surface(const SurfaceSpec& s) {
  if (s.genus < 0 || s.punctures < 0 || s.boundary < 0) {
    throw InvalidArgument("genus, punctures and boundary must be nonnegative");
  }
  if (s.curve == CurveKind::bounds_punctured_disc) {
    throw OutOfHypotheses("a curve bounding a disc with punctures is excluded");
  }
  if (s.curve == CurveKind::separating) {
    const bool ok = s.closed() ? (s.side_genus >= 1 && 2 * s.side_genus <= s.genus)
                               : (s.side_genus >= 0 && s.side_genus <= s.genus);
    if (!ok) {
      throw InvalidArgument("side genus " + std::to_string(s.side_genus) + " is impossible for a separating curve on genus " +
                            std::to_string(s.genus));
    }
  }
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::nonseparating: return "nonseparating";
    case CurveKind::separating: return "separating";
    case CurveKind::bounds_punctured_disc: return "bounds-punctured-disc";
  }
  return "unknown";
}

std::optional<CurveKind> parse_curve_kind(std::string_view text) {
  for (CurveKind k : {CurveKind::nonseparating, CurveKind::separating, CurveKind::bounds_punctured_disc}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  return std::nullopt;
}

SclBoundReport bound_report(const SurfaceSpec& s) {
  check_surface(s);
  SclBoundReport r;
  r.element = "t_a";
  r.positive = true;
  if (!s.closed()) {
    if (checked_add(s.genus, s.boundary) < 2) {
      throw OutOfHypotheses("positivity needs g + q >= 2");
    }
    return r;
  }
  if (s.genus < 2) {
    throw OutOfHypotheses("closed-surface bounds need genus >= 2");
  }
  r.commutator_power_threshold = checked_sub(checked_mul(9, s.genus), 3);
  if (s.genus == 2) {
    if (s.curve == CurveKind::nonseparating) {
      r.element = "t_a^10";
      r.lower = Rational(1, 3);
      r.upper = Rational(3, 2);
    } else {
      r.element = "t_a^5";
      r.upper = Rational(41, 2);
    }
    return r;
  }
  r.lower = Rational(1, main_denominator(s.genus));
  r.upper = s.curve == CurveKind::nonseparating ? Rational(3, 20) : Rational(3, 4);
  return r;
}

std::int64_t cl_upper(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) {
    throw InvalidArgument("cl_upper needs r >= 1 and k >= 1");
  }
  return checked_add(checked_add(checked_mul(k, r - 1), k / 2), 1);
}

SclEstimate scl_from_counts(std::span<const std::pair<std::int64_t, std::int64_t>> counts) {
  if (counts.empty()) {
    throw InvalidArgument("scl_from_counts needs at least one (n, c_n) point");
  }
  std::map<std::int64_t, std::int64_t> c;
  for (const auto& [n, cn] : counts) {
    if (n <= 0 || cn < 0) {
      throw InvalidArgument("points need n > 0 and c_n >= 0");
    }
    if (!c.emplace(n, cn).second) {
      throw InvalidArgument("n = " + std::to_string(n) + " appears twice");
    }
  }
  SclEstimate out;
  out.estimate = Rational(c.begin()->second, c.begin()->first);
  out.subadditive = true;
  for (const auto& [n, cn] : c) {
    out.estimate = std::min(out.estimate, Rational(cn, n));
    for (const auto& [m, cm] : c) {
      if (m < n) {
        continue;
      }
      const auto it = c.find(checked_add(n, m));
      if (it != c.end() && it->second > checked_add(cn, cm)) {
        out.subadditive = false;
      }
    }
  }
  return out;
}

Rational growth_rate_lower(std::int64_t k_gen, const SurfaceSpec& s) {
  if (k_gen < 1) {
    throw InvalidArgument("the generating-set size must be positive");
  }
  check_surface(s);
  const std::int64_t closed_genus = checked_add(s.genus, s.boundary);
  if (closed_genus < 2) {
    throw OutOfHypotheses("the growth bound needs g + q >= 2");
  }
  // scl(t^10) >= 1/3 at genus 2 and 10/(18G-6) otherwise.
  const Rational scl10 = closed_genus == 2 ? Rational(1, 3) : Rational(10, main_denominator(closed_genus));
  return Rational(scl10.numerator(), checked_mul(checked_mul(10, k_gen), scl10.denominator()));
}

}  // namespace scltwist
