#include "scltwist/numerology.hpp"

#include <algorithm>

#include "scltwist/detail/checked.hpp"
#include "scltwist/errors.hpp"

namespace scltwist {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

void check_fibration(std::int64_t g, const Rational& r) {
  if (g < 2) {
    throw InvalidArgument("fibre genus must be at least 2");
  }
  if (r <= 0) {
    throw InvalidArgument("r must be positive");
  }
}

}  // namespace

FibrationInvariants invariants_report(std::int64_t g, const Rational& r, std::int64_t n) {
  check_fibration(g, r);
  if (n < 1) {
    throw InvalidArgument("n must be positive");
  }
  const std::int64_t scaled = checked_mul(r.numerator(), n);
  if (scaled % r.denominator() != 0) {
    throw InvalidArgument("r*n = " + to_string(r) + "*" + std::to_string(n) + " is not an integer");
  }
  FibrationInvariants f;
  f.g = g;
  f.r = r;
  f.n = n;
  f.rn = scaled / r.denominator();
  const std::int64_t grn = checked_mul(g, f.rn);
  const std::int64_t g1rn1 = checked_mul(g - 1, f.rn - 1);
  f.chi = checked_add(checked_mul(4, g1rn1), n);
  f.b1_upper = checked_add(checked_mul(2, g), checked_mul(2, f.rn));
  f.b2minus_lower = n - 1;
  f.b2plus_upper = checked_add(checked_mul(4, grn), 3);
  f.sigma_upper = checked_add(checked_sub(checked_mul(4, grn), n), 4);
  f.c1sq_li_lower = checked_mul(2, g1rn1);
  // ((18g-6)r-1)n + 18 - 6g = (18g-6)rn - n + 18 - 6g
  f.contradiction_value = checked_sub(
      checked_add(checked_sub(checked_mul(checked_sub(checked_mul(18, g), 6), f.rn), n), 18), checked_mul(6, g));
  f.b2_upper_via_chi = checked_sub(checked_add(f.chi, checked_mul(2, f.b1_upper)), 2);
  f.c1sq_upper = checked_add(checked_mul(3, f.sigma_upper), checked_mul(2, f.chi));
  f.b2_consistent = checked_add(f.b2minus_lower, f.b2plus_upper) == f.b2_upper_via_chi;
  f.c1sq_consistent = checked_sub(f.c1sq_upper, f.c1sq_li_lower) == f.contradiction_value;
  return f;
}

ContradictionSearch find_contradiction_n(std::int64_t g, const Rational& r) {
  check_fibration(g, r);
  const std::int64_t p = r.numerator();
  const std::int64_t q = r.denominator();
  // With n = m q the value is a m + b.
  const std::int64_t a = checked_sub(checked_mul(checked_sub(checked_mul(18, g), 6), p), q);
  const std::int64_t b = checked_sub(18, checked_mul(6, g));
  ContradictionSearch out;
  if (a >= 0) {
    out.impossible = true;
    return out;
  }
  const std::int64_t m = b < 0 ? 1 : checked_add(b / -a, 1);
  out.n = checked_mul(m, q);
  return out;
}

IntersectionMatrix intersection_matrix(std::int64_t m) {
  if (m < 1 || m > kMaxIntersectionSize) {
    throw InvalidArgument("matrix size must be between 1 and " + std::to_string(kMaxIntersectionSize));
  }
  const auto size = static_cast<std::size_t>(m);
  IntersectionMatrix out;
  out.entries.assign(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    out.entries[i][i] = 2;
    if (i + 1 < size) {
      out.entries[i][i + 1] = 1;
      out.entries[i + 1][i] = 1;
    }
  }
  // Bareiss elimination without pivoting: the k-th pivot is the k-th leading
  // principal minor.
  auto a = out.entries;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < size; ++k) {
    const std::int64_t pivot = a[k][k];
    out.minors.push_back(pivot);
    if (pivot == 0) {
      break;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = checked_sub(checked_mul(a[i][j], pivot), checked_mul(a[i][k], a[k][j])) / prev;
      }
    }
    prev = pivot;
  }
  out.positive_definite = out.minors.size() == size &&
                          std::all_of(out.minors.begin(), out.minors.end(), [](std::int64_t d) { return d > 0; });
  return out;
}

}  // namespace scltwist
