#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "fixtures.hpp"
#include "spectra/determinantal.hpp"
#include "spectra/real_check.hpp"

using namespace spectra;
using testing::cst;
using testing::var;

namespace {

UnivariatePoly U(std::vector<Rational> c) { return UnivariatePoly(std::move(c)); }

Poly shifted(const Poly& h) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < h.num_vars(); ++i) images.push_back(var(h.num_vars(), i) + cst(h.num_vars(), 1));
  return compose(h, images);
}

// Largest relative imaginary part among companion-matrix eigenvalues.
double companion_max_imag(const UnivariatePoly& q) {
  const std::size_t d = *q.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  const double lead = q.coeff(d).to_double();
  for (std::size_t i = 0; i < d; ++i) {
    c(0, static_cast<Eigen::Index>(i)) = -q.coeff(d - 1 - i).to_double() / lead;
    if (i + 1 < d) c(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  double worst = 0.0;
  for (const auto& lambda : Eigen::EigenSolver<Eigen::MatrixXd>(c, false).eigenvalues())
    worst = std::max(worst, std::abs(lambda.imag()) / (1.0 + std::abs(lambda)));
  return worst;
}

}  // namespace

TEST_CASE("squarefree_part") {
  const UnivariatePoly q = U({-1, 1}) * U({-1, 1}) * U({2, 1});
  CHECK(squarefree_part(q) == U({-1, 1}) * U({2, 1}));
  CHECK(squarefree_part(U({1, 0, 1})) == U({1, 0, 1}));
  CHECK(squarefree_part(UnivariatePoly::constant(5)) == UnivariatePoly::constant(1));
  CHECK_THROWS_AS(squarefree_part(UnivariatePoly()), Error);
}

TEST_CASE("is_real_rooted") {
  CHECK_FALSE(is_real_rooted(U({1, 0, 1})));
  CHECK(is_real_rooted(U({-1, 1}) * U({-1, 1}) * U({2, 1})));
  CHECK(is_real_rooted(U({0, -1, 0, 1})));
  CHECK(sturm_chain(U({0, -1, 0, 1})).distinct_real_roots() == 3);
  CHECK(is_real_rooted(UnivariatePoly()));
  CHECK(is_real_rooted(UnivariatePoly::constant(3)));
}

TEST_CASE("Sturm verdict agrees with companion eigenvalues") {
  Rng rng(2024);
  int checked = 0, real_count = 0;
  while (checked < 500) {
    const auto degree = static_cast<std::size_t>(rng.between(1, 10));
    UnivariatePoly q = UnivariatePoly::constant(1);
    if (rng.below(2) == 0) {
      // Product of linear factors with distinct rational roots.
      std::set<Rational> roots;
      while (roots.size() < degree) roots.insert(Rational(static_cast<long>(rng.between(-20, 20)), 4));
      for (const Rational& r : roots) q = q * U({-r, 1});
    } else {
      std::vector<Rational> c;
      for (std::size_t i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng.between(-9, 9)));
      c.back() = Rational(static_cast<long>(rng.between(1, 9)));
      q = U(c);
    }
    // Repeated or clustered roots are borderline for the float check.
    if (squarefree_part(q).degree() != q.degree()) continue;
    const double imag = companion_max_imag(q);
    if (imag > 1e-7 && imag < 1e-3) continue;
    const bool exact = is_real_rooted(q);
    CHECK(exact == (imag <= 1e-7));
    real_count += exact;
    ++checked;
  }
  CHECK(real_count > 100);
}

TEST_CASE("rz_check") {
  const Poly p = shifted(bases_polynomial(vamos()));
  Rng rng(42);
  std::vector<std::vector<Rational>> dirs;
  for (int k = 0; k < 100; ++k) dirs.push_back(random_direction(rng, 8));
  for (const auto& v : rz_check(p, dirs)) CHECK(v.real_rooted);

  const Poly q = cst(2, 1) + var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1);
  const std::vector<std::vector<Rational>> d1{{1, 0}, {0, 0}};
  const auto verdicts = rz_check(q, d1);
  CHECK(verdicts[0].restriction == U({1, 0, 1}));
  CHECK_FALSE(verdicts[0].real_rooted);
  CHECK(verdicts[1].restriction == UnivariatePoly::constant(1));
  CHECK(verdicts[1].real_rooted);
}

TEST_CASE("hyperbolicity_check") {
  const Poly h = bases_polynomial(vamos());
  const std::vector<Rational> ones(8, Rational(1));
  Rng rng(5);
  std::vector<std::vector<Rational>> xs;
  for (int k = 0; k < 100; ++k) xs.push_back(random_direction(rng, 8));
  for (const auto& v : hyperbolicity_check(h, ones, xs)) CHECK(v.real_rooted);

  const Poly circle = var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1);
  const std::vector<Rational> e1{1, 0};
  const std::vector<std::vector<Rational>> x01{{0, 1}};
  CHECK_FALSE(hyperbolicity_check(circle, e1, x01)[0].real_rooted);

  const Poly x1x2 = var(2, 0) * var(2, 1);
  const std::vector<Rational> e11{1, 1};
  std::vector<std::vector<Rational>> xs2;
  for (int k = 0; k < 20; ++k) xs2.push_back(random_direction(rng, 2));
  for (const auto& v : hyperbolicity_check(x1x2, e11, xs2)) CHECK(v.real_rooted);

  CHECK_THROWS_AS(hyperbolicity_check(x1x2 + cst(2, 1), e11, xs2), Error);
  const std::vector<Rational> e10{1, 0};
  CHECK_THROWS_AS(hyperbolicity_check(x1x2, e10, xs2), Error);
}

TEST_CASE("hyperbolic_rank") {
  const Poly x1x2 = var(2, 0) * var(2, 1);
  const std::vector<Rational> e11{1, 1}, d1{1, 0}, zero2{0, 0};
  CHECK(hyperbolic_rank(x1x2, e11, d1) == 1);
  CHECK(hyperbolic_rank(x1x2, e11, zero2) == 0);
  const std::vector<Rational> ones(8, Rational(1)), x{1, 0, 0, 1, 1, 1, 0, 0};
  CHECK(hyperbolic_rank(bases_polynomial(vamos()), ones, x) == 3);
}

TEST_CASE("rank_e_independence") {
  const Poly h = bases_polynomial(vamos());
  const std::vector<Rational> e1(8, Rational(1)), e2{1, 2, 1, 3, 1, 1, 2, 1};
  Rng rng(77);
  std::vector<std::vector<Rational>> xs;
  for (int k = 0; k < 20; ++k) xs.push_back(random_direction(rng, 8));
  // Sparse 0/1 directions hit the rank drops.
  for (std::uint32_t b : {0u, 0b111001u, 0b11110000u, 0b1u}) xs.push_back(indicator(SubsetMask(b), 8));
  for (const auto& c : rank_e_independence(h, e1, e2, xs)) CHECK(c.agree());

  const Poly x1x2 = var(2, 0) * var(2, 1);
  const std::vector<Rational> f1{1, 1}, f2{2, 3};
  std::vector<std::vector<Rational>> ys{{1, 0}, {0, 1}, {1, -1}, {0, 0}};
  const auto cmp = rank_e_independence(x1x2, f1, f2, ys);
  for (const auto& c : cmp) CHECK(c.agree());
  CHECK(cmp.back().rank_at_e1 == 0);
}

TEST_CASE("hyperbolic_rank matches the polymatroid table") {
  Rng rng(4);
  const Matroid m = testing::random_sparse_paving(rng, 3, 7, 10);
  const Poly h = bases_polynomial(m);
  std::vector<std::vector<Rational>> units(7, std::vector<Rational>(7, Rational(0)));
  for (std::size_t i = 0; i < 7; ++i) units[i][i] = 1;
  const std::vector<Rational> e = random_positive_point(rng, 7);
  const RankTable table = hyperbolic_rank_table(h, units, e);
  for (std::uint32_t b = 0; b < 128; ++b)
    CHECK(static_cast<std::int64_t>(hyperbolic_rank(h, e, indicator(SubsetMask(b), 7))) == table[SubsetMask(b)]);
}

TEST_CASE("determinantal polynomials are real-zero") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = static_cast<std::size_t>(rng.between(1, 3));
    const auto n = static_cast<std::size_t>(rng.between(1, 3));
    Representation rep{m, std::nullopt, {}};
    for (std::size_t i = 0; i < n; ++i)
      rep.pencil.push_back(testing::random_hermitian(rng, static_cast<Eigen::Index>(m)));
    const Poly p = expand_det_affine(rep);
    std::vector<std::vector<Rational>> dirs;
    for (int k = 0; k < 50; ++k) dirs.push_back(random_direction(rng, n));
    for (const auto& v : rz_check(p, dirs)) CHECK(v.real_rooted);
  }
}

TEST_CASE("stability_sample") {
  const auto report = stability_sample(bases_polynomial(vamos()), 1000, 42);
  CHECK_FALSE(report.zero_found());
  CHECK(report.seed == 42);
  CHECK(report.min_abs_value > 0.0);

  GaussPoly p = widen(var(1, 0));
  p = p - GaussPoly::constant(1, GaussRational::i());
  const auto hit = stability_sample(p, 10, 1);
  REQUIRE(hit.zero_found());
  CHECK(std::abs((*hit.candidate)[0] - Complex(0, 1)) < 1e-12);
  CHECK(hit.exact_zero_confirmed);

  CHECK_FALSE(stability_sample(cst(3, 1), 50, 3).zero_found());

  // Same seed, same numbers.
  CHECK(stability_sample(bases_polynomial(vamos()), 200, 9).min_abs_value ==
        stability_sample(bases_polynomial(vamos()), 200, 9).min_abs_value);
}
