#pragma once

// Test-only generators and independent oracles.

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "spectra/determinantal.hpp"
#include "spectra/matroid.hpp"
#include "spectra/polynomial.hpp"
#include "spectra/random.hpp"
#include "spectra/reduce.hpp"

namespace spectra::testing {

inline Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
inline Poly cst(std::size_t n, long c) { return Poly::constant(n, Rational(c)); }

/// Random polynomial with small integer coefficients and exponents <= max_exp.
inline Poly random_poly(Rng& rng, std::size_t n, std::size_t terms, std::uint32_t max_exp = 2) {
  Poly p(n);
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(rng.between(0, max_exp));
    p.add_term(m, Rational(static_cast<long>(rng.between(-5, 5)), static_cast<long>(rng.between(1, 3))));
  }
  return p;
}

inline Rational small_rational(Rng& rng, long range = 3, long max_den = 3) {
  return Rational(static_cast<long>(rng.between(-range, range)), static_cast<long>(rng.between(1, max_den)));
}

inline GaussRational small_gauss(Rng& rng) { return {small_rational(rng), small_rational(rng)}; }

inline ExactMatrix random_gauss_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ExactMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = small_gauss(rng);
  return m;
}

inline ExactMatrix random_rational_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long range = 2) {
  ExactMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = GaussRational(small_rational(rng, range, 2));
  return m;
}

/// Hermitian matrix V V* with V random m x k.
inline ExactMatrix random_psd(Rng& rng, Eigen::Index m, Eigen::Index k) {
  ExactMatrix v = random_gauss_matrix(rng, m, k);
  return v * v.adjoint();
}

/// Random hermitian (not necessarily PSD) matrix.
inline ExactMatrix random_hermitian(Rng& rng, Eigen::Index m) {
  ExactMatrix a = random_gauss_matrix(rng, m, m);
  ExactMatrix h = a + a.adjoint();
  return h;
}

/// Leibniz-formula determinant: sum over permutations.
template <class S>
S leibniz_det(const Matrix<S>& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  S total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    S term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Matroid rank by searching independent subsets of S, largest first, with
/// independence = contained in some basis. Independent of rank().
inline std::size_t brute_rank(const std::vector<SubsetMask>& bases, SubsetMask s) {
  for (std::size_t k = s.size() + 1; k-- > 0;) {
    for (std::uint32_t sub = s.bits();; sub = (sub - 1) & s.bits()) {
      if (static_cast<std::size_t>(std::popcount(sub)) == k)
        for (SubsetMask b : bases)
          if (SubsetMask(sub).is_subset_of(b)) return k;
      if (sub == 0) break;
    }
  }
  return 0;
}

/// Sparse paving matroid: r-subsets pairwise meeting in <= r-2 elements are
/// removed from the uniform matroid. Always a valid matroid.
inline Matroid random_sparse_paving(Rng& rng, std::size_t r, std::size_t n, std::size_t attempts) {
  std::vector<SubsetMask> all;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (static_cast<std::size_t>(std::popcount(bits)) == r) all.emplace_back(bits);
  std::set<SubsetMask> removed;
  for (std::size_t k = 0; k < attempts; ++k) {
    SubsetMask cand = all[rng.below(all.size())];
    bool ok = true;
    for (SubsetMask h : removed)
      if ((h & cand).size() > r - 2) ok = false;
    if (ok && removed.size() + 1 < all.size()) removed.insert(cand);
  }
  std::vector<SubsetMask> bases;
  for (SubsetMask b : all)
    if (!removed.count(b)) bases.push_back(b);
  return matroid_from_bases(n, bases);
}

/// Column matroid of a random small integer matrix (rank r, n columns).
inline Matroid random_column_matroid(Rng& rng, std::size_t r, std::size_t n) {
  while (true) {
    ExactMatrix a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = GaussRational(static_cast<long>(rng.between(-1, 1)));
    std::vector<SubsetMask> bases;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if (static_cast<std::size_t>(std::popcount(bits)) != r) continue;
      ExactMatrix sub(a.rows(), a.rows());
      Eigen::Index k = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((bits >> j) & 1u) sub.col(k++) = a.col(static_cast<Eigen::Index>(j));
      if (!determinant(sub).is_zero()) bases.emplace_back(bits);
    }
    if (!bases.empty()) return matroid_from_bases(n, bases);
  }
}

/// Random unitary matrix from the QR factorization of a Gaussian matrix.
inline FloatMatrix random_unitary(Rng& rng, Eigen::Index n) {
  FloatMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  Eigen::HouseholderQR<FloatMatrix> qr(g);
  return qr.householderQ() * FloatMatrix::Identity(n, n);
}

/// Known ground truth for the reduction: A_i = Q diag(T_i, 0) Q* with
/// T_i PSD, sum T_i = I_d, so det(I + sum x_i A_i) = det(I_d + sum x_i T_i).
struct PaddedFixture {
  FloatRepresentation rep;
  std::vector<FloatMatrix> truth;
};

inline PaddedFixture padded_fixture(Rng& rng, Eigen::Index big, Eigen::Index d, std::size_t n) {
  std::vector<FloatMatrix> raw;
  FloatMatrix gram = FloatMatrix::Zero(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    FloatMatrix v(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) v(r, c) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    raw.push_back(v * v.adjoint());
    gram += raw.back();
  }
  Eigen::SelfAdjointEigenSolver<FloatMatrix> eig(gram);
  const FloatMatrix inv_sqrt = eig.operatorInverseSqrt();
  const FloatMatrix q = random_unitary(rng, big);
  PaddedFixture out;
  out.rep.size = static_cast<std::size_t>(big);
  for (const auto& r : raw) {
    FloatMatrix t = inv_sqrt * r * inv_sqrt;
    t = (t + t.adjoint()) / 2.0;
    out.truth.push_back(t);
    FloatMatrix padded = FloatMatrix::Zero(big, big);
    padded.topLeftCorner(d, d) = t;
    FloatMatrix a = q * padded * q.adjoint();
    out.rep.pencil.push_back((a + a.adjoint()) / 2.0);
  }
  return out;
}

inline std::vector<double> random_box_point(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

}  // namespace spectra::testing
