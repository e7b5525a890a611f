#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "spectra/determinantal.hpp"

using namespace spectra;
using testing::cst;
using testing::var;

namespace {

ExactMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = GaussRational(v);
    ++r;
  }
  return m;
}

ExactMatrix outer(const ExactMatrix& v) { return v * v.adjoint(); }

// Pencil sum_j z_j b_j b_j* with zero constant term, so that det equals det(B diag(z) B*).
Representation gram_pencil(const ExactMatrix& b) {
  const auto m = static_cast<std::size_t>(b.rows());
  Representation rep{m, ExactMatrix(ExactMatrix::Zero(b.rows(), b.rows())), {}};
  for (Eigen::Index j = 0; j < b.cols(); ++j) rep.pencil.push_back(outer(b.col(j)));
  return rep;
}

}  // namespace

TEST_CASE("expand_det_affine") {
  const Representation diag{2, std::nullopt, {mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}})}};
  const Poly x = var(2, 0), y = var(2, 1), one = cst(2, 1);
  CHECK(expand_det_affine(diag) == one + x + y + x * y);

  const Representation swap{2, std::nullopt, {mat({{0, 1}, {1, 0}})}};
  CHECK(expand_det_affine(swap) == cst(1, 1) - var(1, 0) * var(1, 0));

  const Representation empty{3, std::nullopt, {}};
  CHECK(expand_det_affine(empty) == cst(0, 1));

  ExactMatrix skew = mat({{0, 1}, {0, 0}});
  CHECK_THROWS_AS(expand_det_affine(Representation{2, std::nullopt, {skew}}), Error);
  CHECK_THROWS_AS(expand_det_affine(Representation{3, std::nullopt, {mat({{1, 0}, {0, 1}})}}), Error);
  CHECK_THROWS_AS(expand_det_affine(Representation{13, std::nullopt, {}}), Error);
}

TEST_CASE("expansion agrees with Leibniz determinants at random points") {
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = rng.between(1, 4);
    const auto n = static_cast<std::size_t>(rng.between(1, 3));
    Representation rep{static_cast<std::size_t>(m), testing::random_gauss_matrix(rng, m, m), {}};
    for (std::size_t i = 0; i < n; ++i) rep.pencil.push_back(testing::random_gauss_matrix(rng, m, m));
    const GaussPoly p = expand_det_affine_complex(rep);
    for (int k = 0; k < 3; ++k) {
      std::vector<GaussRational> z;
      ExactMatrix acc = *rep.a0;
      for (std::size_t i = 0; i < n; ++i) {
        z.push_back(testing::small_gauss(rng));
        acc += z.back() * rep.pencil[i];
      }
      CHECK(eval(p, z) == testing::leibniz_det(acc));
    }
  }
}

TEST_CASE("hermitian pencils expand with real coefficients") {
  Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = rng.between(1, 4);
    Representation rep{static_cast<std::size_t>(m), testing::random_hermitian(rng, m), {}};
    for (int i = 0; i < 3; ++i) rep.pencil.push_back(testing::random_hermitian(rng, m));
    const GaussPoly p = expand_det_affine_complex(rep);
    for (const auto& [mono, c] : p.terms()) CHECK(c.im().is_zero());
    CHECK(widen(expand_det_affine(rep)) == p);
  }
}

TEST_CASE("block-diagonal pencils multiply") {
  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = rng.between(1, 3), b = rng.between(1, 3);
    Representation left{static_cast<std::size_t>(a), std::nullopt, {}}, right{static_cast<std::size_t>(b), std::nullopt, {}};
    Representation whole{static_cast<std::size_t>(a + b), std::nullopt, {}};
    for (int i = 0; i < 2; ++i) {
      left.pencil.push_back(testing::random_hermitian(rng, a));
      right.pencil.push_back(testing::random_hermitian(rng, b));
      ExactMatrix block = ExactMatrix::Zero(a + b, a + b);
      block.topLeftCorner(a, a) = left.pencil.back();
      block.bottomRightCorner(b, b) = right.pencil.back();
      whole.pencil.push_back(block);
    }
    CHECK(expand_det_affine(whole) == expand_det_affine(left) * expand_det_affine(right));
  }
}

TEST_CASE("cauchy_binet_expand") {
  CHECK(cauchy_binet_expand(mat({{1, 0}, {0, 1}})) == var(2, 0) * var(2, 1));
  CHECK(cauchy_binet_expand(mat({{1, 1}})) == var(2, 0) + var(2, 1));

  Rng rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const auto rows = rng.between(1, 4);
    const auto cols = rng.between(rows, 7);
    const ExactMatrix b = testing::random_gauss_matrix(rng, rows, cols);
    CHECK(cauchy_binet_expand(b) == expand_det_affine(gram_pencil(b)));
  }
}

TEST_CASE("arrangement_rank_table") {
  const std::vector<ExactMatrix> gens{mat({{1}, {0}}), mat({{0}, {1}}), mat({{1}, {1}})};
  const RankTable r = arrangement_rank_table(gens);
  CHECK(r[SubsetMask::of({1, 2, 3})] == 2);
  CHECK(r[SubsetMask::of({1, 3})] == 2);
  CHECK(r[SubsetMask::of({1})] == 1);

  const std::vector<ExactMatrix> zeros(4, ExactMatrix(ExactMatrix::Zero(3, 2)));
  CHECK(arrangement_rank_table(zeros) == RankTable(4));

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = rng.between(1, 5);
    const auto n = static_cast<std::size_t>(rng.between(2, 7));
    std::vector<ExactMatrix> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(testing::random_rational_matrix(rng, m, rng.between(1, 2), 1));
    const RankTable t = arrangement_rank_table(g);
    CHECK(check_polymatroid(t).empty());
    CHECK(ingleton_scan(t, ScanMode::DisjointPairs).empty());
  }
}

TEST_CASE("exact_rank and determinant agree with Leibniz") {
  Rng rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.between(1, 5);
    const ExactMatrix a = testing::random_gauss_matrix(rng, n, n);
    CHECK(determinant(a) == testing::leibniz_det(a));
    const auto k = rng.between(1, n);
    const ExactMatrix low = testing::random_gauss_matrix(rng, n, k) * testing::random_gauss_matrix(rng, k, n);
    CHECK(exact_rank(low) <= static_cast<std::size_t>(k));
    CHECK((exact_rank(low) == static_cast<std::size_t>(n)) == !testing::leibniz_det(low).is_zero());
  }
}

TEST_CASE("psd_rank_degree_rank") {
  const ExactMatrix e1 = mat({{1, 0}, {0, 0}});
  const std::vector<PsdMatrix> two{PsdMatrix::certify(e1), PsdMatrix::certify(e1)};
  CHECK(psd_rank_degree_rank(two, SubsetMask::of({1, 2})).value() == 1);
  const std::vector<PsdMatrix> id{PsdMatrix::certify(mat({{1, 0}, {0, 1}}))};
  CHECK(psd_rank_degree_rank(id, SubsetMask::of({1})).value() == 2);
  CHECK(psd_rank_degree_rank(id, SubsetMask()).value() == 0);

  CHECK_THROWS_AS(PsdMatrix::certify(mat({{1, 2}, {2, 1}})), Error);
  CHECK_THROWS_AS(PsdMatrix::certify(mat({{0, 1}, {1, 0}})), Error);
  CHECK_THROWS_AS(PsdMatrix::certify(mat({{0, 1}, {0, 0}})), Error);

  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = rng.between(2, 5);
    const auto n = static_cast<std::size_t>(rng.between(2, 5));
    std::vector<PsdMatrix> psd;
    for (std::size_t i = 0; i < n; ++i) {
      const ExactMatrix v = testing::random_gauss_matrix(rng, m, 1);
      psd.push_back(trial % 2 ? PsdMatrix::from_gram(v) : PsdMatrix::certify(outer(v)));
    }
    const SubsetMask s(static_cast<std::uint32_t>(rng.below(1u << n)));
    const auto r = psd_rank_degree_rank(psd, s);
    CHECK(r.elimination_rank == r.degree_rank);
    CHECK(r.elimination_rank <= std::min<std::size_t>(s.size(), static_cast<std::size_t>(m)));
  }
}

TEST_CASE("verify_representation") {
  const Representation swap{2, std::nullopt, {mat({{0, 1}, {1, 0}})}};
  const Poly x = var(1, 0), one = cst(1, 1);
  CHECK(!verify_representation(one - x * x, swap).has_value());
  const auto diff = verify_representation(one + x * x, swap);
  REQUIRE(diff.has_value());
  CHECK(diff->monomial == Monomial(std::vector<std::uint32_t>{2}));
  CHECK(diff->polynomial_coeff == GaussRational(1));
  CHECK(diff->determinant_coeff == GaussRational(-1));

  // h_{U2,3}(x + 1) = det(A0 + sum x_i v_i v_i^T) with A0 = sum v_i v_i^T.
  const ExactMatrix v1 = mat({{1}, {0}}), v2 = mat({{0}, {1}}), v3 = mat({{1}, {1}});
  const Representation u23{2, mat({{2, 1}, {1, 2}}), {outer(v1), outer(v2), outer(v3)}};
  std::vector<Poly> shift;
  for (std::size_t i = 0; i < 3; ++i) shift.push_back(var(3, i) + cst(3, 1));
  const Poly p = compose(bases_polynomial(uniform(2, 3)), shift);
  CHECK(!verify_representation(p, u23).has_value());
}
