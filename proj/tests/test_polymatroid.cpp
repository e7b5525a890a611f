#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "spectra/determinantal.hpp"
#include "spectra/lattice.hpp"
#include "spectra/polymatroid.hpp"
#include "spectra/real_check.hpp"

using namespace spectra;

namespace {

std::vector<std::vector<Rational>> unit_vectors(std::size_t n) {
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
  return out;
}

// Ingleton by the textbook formula, written out independently.
std::int64_t ingleton_deficit(const RankTable& r, SubsetMask a, SubsetMask b, SubsetMask c, SubsetMask d) {
  const std::int64_t lhs = r[a | b] + r[a | c | d] + r[c] + r[d] + r[b | c | d];
  const std::int64_t rhs = r[a | c] + r[a | d] + r[b | c] + r[b | d] + r[c | d];
  return lhs - rhs;
}

std::vector<Matroid> fixtures() {
  Rng rng(5);
  std::vector<Matroid> out{vamos(), uniform(2, 3), uniform(4, 8)};
  for (int k = 0; k < 3; ++k) out.push_back(testing::random_sparse_paving(rng, 3, 7, 12));
  return out;
}

}  // namespace

TEST_CASE("check_polymatroid") {
  CHECK(check_polymatroid(rank_table(vamos())).empty());
  CHECK(check_polymatroid(RankTable(4)).empty());

  RankTable bad(2);
  bad[SubsetMask::of({1})] = 1;
  bad[SubsetMask::of({2})] = 1;
  bad[SubsetMask::of({1, 2})] = 3;
  const auto v = check_polymatroid(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == PolymatroidAxiom::Submodular);
  CHECK(v[0].s == SubsetMask::of({1}));
  CHECK(v[0].t == SubsetMask::of({2}));
  CHECK(v[0].lhs == 3);
  CHECK(v[0].rhs == 2);

  RankTable shrinking(1);
  shrinking[SubsetMask::of({1})] = -1;
  const auto w = check_polymatroid(shrinking);
  REQUIRE(!w.empty());
  CHECK(w[0].axiom == PolymatroidAxiom::Monotone);

  RankTable offset(1, {1, 1});
  CHECK(check_polymatroid(offset).front().axiom == PolymatroidAxiom::Normalized);
}

TEST_CASE("ingleton_check at the Vamos quadruple") {
  const RankTable r = rank_table(vamos());
  const auto q = IngletonQuadruple::vamos();
  const auto report = ingleton_check(r, q);
  CHECK(report.lhs == 16);
  CHECK(report.rhs == 15);
  CHECK(report.deficit() == 1);
  CHECK(report.deficit() == ingleton_deficit(r, q.s1, q.s2, q.s3, q.s4));

  CHECK(ingleton_check(r, IngletonQuadruple{}).deficit() == 0);
  CHECK_THROWS_AS(ingleton_check(rank_table(uniform(2, 3)), q), Error);
}

TEST_CASE("ingleton_scan") {
  const auto v = ingleton_scan(rank_table(vamos()), ScanMode::DisjointPairs);
  REQUIRE(v.size() == 1);
  const auto q = v[0].quadruple;
  const auto ref = IngletonQuadruple::vamos();
  // Equal to the Vamos quadruple up to swapping S1,S2 and swapping S3,S4.
  CHECK(((q.s1 == ref.s1 && q.s2 == ref.s2) || (q.s1 == ref.s2 && q.s2 == ref.s1)));
  CHECK(((q.s3 == ref.s3 && q.s4 == ref.s4) || (q.s3 == ref.s4 && q.s4 == ref.s3)));
  CHECK(v[0].deficit() == 1);

  CHECK(ingleton_scan(rank_table(uniform(4, 8)), ScanMode::DisjointPairs).empty());
  CHECK(ingleton_scan(RankTable(6), ScanMode::DisjointPairs).empty());
  CHECK(ingleton_scan(rank_table(vamos()), ScanMode::VamosQuadruple).size() == 1);
  CHECK(ingleton_scan(rank_table(uniform(2, 4)), ScanMode::Full).empty());
  CHECK_THROWS_AS(ingleton_scan(rank_table(uniform(2, 6)), ScanMode::Full), Error);
  CHECK_THROWS_AS(ingleton_scan(rank_table(uniform(2, 4)), ScanMode::VamosQuadruple), Error);
}

TEST_CASE("full scan agrees with brute force on small tables") {
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 4;
    RankTable r(n);
    for (std::uint32_t b = 1; b < 16; ++b) r[SubsetMask(b)] = static_cast<std::int64_t>(rng.between(0, 3));
    std::size_t expected = 0;
    for (std::uint32_t a = 0; a < 16; ++a)
      for (std::uint32_t b = a; b < 16; ++b)
        for (std::uint32_t c = 0; c < 16; ++c)
          for (std::uint32_t d = c; d < 16; ++d)
            if (ingleton_deficit(r, SubsetMask(a), SubsetMask(b), SubsetMask(c), SubsetMask(d)) > 0) ++expected;
    CHECK(ingleton_scan(r, ScanMode::Full).size() == expected);
  }
}

TEST_CASE("scale") {
  const RankTable r = rank_table(vamos());
  CHECK(ingleton_check(scale(r, 3), IngletonQuadruple::vamos()).deficit() == 3);
  CHECK(scale(r, 1) == r);
  CHECK(scale(RankTable(3), 7) == RankTable(3));

  Rng rng(9);
  for (const Matroid& m : fixtures()) {
    const RankTable t = rank_table(m);
    if (m.ground_size() < 8) continue;
    for (std::int64_t n = 1; n <= 4; ++n) {
      const IngletonQuadruple q{SubsetMask(static_cast<std::uint32_t>(rng.below(256))),
                                SubsetMask(static_cast<std::uint32_t>(rng.below(256))),
                                SubsetMask(static_cast<std::uint32_t>(rng.below(256))),
                                SubsetMask(static_cast<std::uint32_t>(rng.below(256)))};
      CHECK(ingleton_check(scale(t, n), q).deficit() == n * ingleton_check(t, q).deficit());
    }
  }
}

TEST_CASE("support_rank") {
  const auto u = support(bases_polynomial(uniform(2, 3)));
  CHECK(support_rank(u, SubsetMask::of({1})) == 1);
  const auto v = support(bases_polynomial(vamos()));
  CHECK(support_rank(v, SubsetMask::of({1, 4, 5, 6})) == 3);
  CHECK(support_rank(LatticePointSet(3, {{0, 0, 0}}), SubsetMask::of({1, 2})) == 0);
  CHECK_THROWS_AS(support_rank(LatticePointSet(3), SubsetMask::of({1})), Error);
}

TEST_CASE("hyperbolic_rank_table") {
  const auto units = unit_vectors(8);
  const std::vector<Rational> ones(8, Rational(1));
  CHECK(hyperbolic_rank_table(bases_polynomial(vamos()), units, ones) == rank_table(vamos()));

  const Poly x1x2 = testing::var(2, 0) * testing::var(2, 1);
  const std::vector<std::vector<Rational>> d1{{1, 0}};
  const std::vector<Rational> e2{1, 1};
  const RankTable t = hyperbolic_rank_table(x1x2, d1, e2);
  CHECK(t[SubsetMask::of({1})] == 1);
  CHECK(t[SubsetMask()] == 0);

  const std::vector<Rational> zero{0, 0};
  CHECK_THROWS_AS(hyperbolic_rank_table(x1x2, d1, zero), Error);
}

TEST_CASE("rank tables from polynomial, support and matroid agree") {
  for (const Matroid& m : fixtures()) {
    const std::size_t n = m.ground_size();
    const Poly h = bases_polynomial(m);
    const RankTable hyp = hyperbolic_rank_table(h, unit_vectors(n), std::vector<Rational>(n, Rational(1)));
    CHECK(hyp == rank_table(m));
    const auto supp = support(h);
    for (std::uint32_t b = 0; b < (1u << n); ++b) CHECK(support_rank(supp, SubsetMask(b)) == hyp[SubsetMask(b)]);
  }
}

TEST_CASE("powers of h scale the rank table") {
  const Poly h = bases_polynomial(vamos());
  const auto units = unit_vectors(8);
  const std::vector<Rational> ones(8, Rational(1));
  const RankTable base = hyperbolic_rank_table(h, units, ones);
  for (std::uint32_t n = 1; n <= 3; ++n)
    CHECK(hyperbolic_rank_table(poly_pow(h, n), units, ones) == scale(base, n));
}

TEST_CASE("arrangement tables are Ingleton polymatroids") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = static_cast<Eigen::Index>(rng.between(1, 4));
    const auto n = static_cast<std::size_t>(rng.between(4, 6));
    std::vector<ExactMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(testing::random_rational_matrix(rng, m, rng.between(1, 2), 1));
    const RankTable r = arrangement_rank_table(gens);
    CHECK(check_polymatroid(r).empty());
    CHECK(ingleton_scan(r, ScanMode::DisjointPairs).empty());
  }
}
