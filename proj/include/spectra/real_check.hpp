#pragma once

// Exact real-rootedness (Sturm sequences), directional real-zero and
// hyperbolicity certification, the hyperbolic rank function, and
// float sampling for stability falsification.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "spectra/polynomial.hpp"
#include "spectra/random.hpp"

namespace spectra {

/// q, q', then negated remainders, each rescaled by a positive rational.
struct SturmChain {
  std::vector<UnivariatePoly> polys;

  std::size_t variations_at_neg_inf() const;
  std::size_t variations_at_pos_inf() const;
  /// Number of distinct real roots of q.
  std::size_t distinct_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
};

SturmChain sturm_chain(const UnivariatePoly& q);

/// q / gcd(q, q'), primitive with positive leading coefficient.
UnivariatePoly squarefree_part(const UnivariatePoly& q);

/// Zero and constant polynomials count as real-rooted.
bool is_real_rooted(const UnivariatePoly& q);

struct DirectionVerdict {
  std::vector<Rational> direction;
  UnivariatePoly restriction;
  bool real_rooted;
};

/// For each x: is t -> p(t x) real-rooted? Certifies only the given directions.
std::vector<DirectionVerdict> rz_check(const Poly& p, std::span<const std::vector<Rational>> directions);

/// For each x: is t -> h(x + t e) real-rooted? h must be homogeneous with h(e) != 0.
std::vector<DirectionVerdict> hyperbolicity_check(const Poly& h, std::span<const Rational> e,
                                                  std::span<const std::vector<Rational>> points);

/// deg of t -> h(e + t x). Computed by substituting into a one-variable
/// polynomial, independently of restrict_univariate.
std::size_t hyperbolic_rank(const Poly& h, std::span<const Rational> e, std::span<const Rational> x);

struct RankComparison {
  std::vector<Rational> x;
  std::size_t rank_at_e1;
  std::size_t rank_at_e2;
  bool agree() const { return rank_at_e1 == rank_at_e2; }
};

std::vector<RankComparison> rank_e_independence(const Poly& h, std::span<const Rational> e1,
                                                std::span<const Rational> e2,
                                                std::span<const std::vector<Rational>> xs);

struct StabilityReport {
  std::uint64_t seed;
  std::size_t samples;
  double min_abs_value;
  /// First sample with |p| < kStabilityZeroTol, if any.
  std::optional<std::vector<Complex>> candidate;
  /// The candidate rounded to a Gaussian-rational point is an exact zero.
  bool exact_zero_confirmed = false;

  bool zero_found() const { return candidate.has_value(); }
};

inline constexpr double kStabilityZeroTol = 1e-12;

/// Float evaluation at `samples` points of the open upper half-plane product:
/// the first point is i*(1,...,1); the rest have Re uniform in (-2,2) and
/// Im uniform in (0.1,2).
template <class S>
StabilityReport stability_sample(const Polynomial<S>& p, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  StabilityReport report{seed, samples, INFINITY, std::nullopt, false};
  const std::size_t n = p.num_vars();
  std::vector<Complex> point(n);
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      point[i] = k == 0 ? Complex(0.0, 1.0) : Complex(rng.uniform_open(-2.0, 2.0), rng.uniform_open(0.1, 2.0));
    const double value = std::abs(eval<Complex>(p, point));
    report.min_abs_value = std::min(report.min_abs_value, value);
    if (value < kStabilityZeroTol && !report.candidate) report.candidate = point;
  }
  if (report.candidate) {
    // Re-check exactly at the nearest point with denominators 10^6.
    std::vector<GaussRational> exact;
    for (const Complex& z : *report.candidate)
      exact.emplace_back(Rational(std::lround(z.real() * 1e6), 1000000), Rational(std::lround(z.imag() * 1e6), 1000000));
    GaussPoly wide;
    if constexpr (std::is_same_v<S, Rational>) wide = widen(p);
    else wide = p;
    report.exact_zero_confirmed = eval<GaussRational>(wide, exact).is_zero();
  }
  return report;
}

}  // namespace spectra
