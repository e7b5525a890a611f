#pragma once

// Exact determinantal representations det(A0 + x1 A1 + ... + xn An), the
// Cauchy-Binet expansion det(B Z B*), and subspace-arrangement rank tables.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectra/polymatroid.hpp"
#include "spectra/polynomial.hpp"
#include "spectra/scalar.hpp"

namespace spectra {

inline constexpr std::size_t kMaxDetSize = 12;
inline constexpr std::size_t kMaxArrangementSize = 12;

template <class S>
bool is_hermitian(const Matrix<S>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (!(a(i, j) == conj(a(j, i)))) return false;
  return true;
}

/// Gaussian elimination over the field S.
template <class S>
S determinant(Matrix<S> a) {
  if (a.rows() != a.cols()) throw Error(Errc::ArityMismatch, "determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && is_zero(a(pivot, c))) ++pivot;
    if (pivot == n) return S(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      const S factor = a(r, c) / a(c, c);
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= factor * a(c, k);
    }
  }
  return det;
}

/// Rank by fraction-free (Bareiss) elimination with column skipping.
template <class S>
std::size_t exact_rank(Matrix<S> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  S prev(1);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && is_zero(a(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = S(0);
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

/// Affine pencil A0 + sum x_i A_i; A0 defaults to the identity (monic case).
struct Representation {
  std::size_t size = 0;
  std::optional<ExactMatrix> a0;
  std::vector<ExactMatrix> pencil;

  std::size_t num_vars() const { return pencil.size(); }
  ExactMatrix constant_term() const {
    return a0 ? *a0 : ExactMatrix(ExactMatrix::Identity(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size)));
  }
  /// Throws ArityMismatch unless every matrix is size x size.
  void validate() const;
};

/// Exact det(A0 + sum x_i A_i) for arbitrary Gaussian-rational matrices.
/// Expansion by minors over column subsets: 2^m entries, each a polynomial.
GaussPoly expand_det_affine_complex(const Representation& rep, std::size_t max_size = kMaxDetSize);

/// Real-coefficient expansion; every matrix must be hermitian.
Poly expand_det_affine(const Representation& rep, std::size_t max_size = kMaxDetSize);

/// det(B diag(z) B*) = sum_S |det B(:,S)|^2 prod_{j in S} z_j.
Poly cauchy_binet_expand(const ExactMatrix& b);

/// values[S] = rank of the columns of all gens[i], i in S.
RankTable arrangement_rank_table(std::span<const ExactMatrix> gens);

/// A hermitian matrix together with an exact PSD certificate.
class PsdMatrix {
 public:
  /// LDL* with diagonal pivoting; throws PsdCertificateFailure on a negative
  /// pivot or a zero pivot with a nonzero row.
  static PsdMatrix certify(const ExactMatrix& a);
  /// A = V V*; PSD by construction.
  static PsdMatrix from_gram(const ExactMatrix& v);

  const ExactMatrix& value() const { return value_; }

 private:
  explicit PsdMatrix(ExactMatrix value) : value_(std::move(value)) {}
  ExactMatrix value_;
};

struct PsdRankDegree {
  std::size_t elimination_rank;
  std::size_t degree_rank;
  std::size_t value() const { return elimination_rank; }
};

/// rank(sum_{i in S} A_i) and deg det(I + t sum_{i in S} A_i), both computed;
/// throws IdentityFailure if they differ.
PsdRankDegree psd_rank_degree_rank(std::span<const PsdMatrix> psd, SubsetMask s);

struct RepresentationDifference {
  Monomial monomial;
  GaussRational polynomial_coeff;
  GaussRational determinant_coeff;
};

/// nullopt when p equals the expanded determinant; otherwise the first
/// monomial (canonical order) where they differ.
std::optional<RepresentationDifference> verify_representation(const GaussPoly& p, const Representation& rep,
                                                              std::size_t max_size = kMaxDetSize);
inline std::optional<RepresentationDifference> verify_representation(const Poly& p, const Representation& rep,
                                                                     std::size_t max_size = kMaxDetSize) {
  return verify_representation(widen(p), rep, max_size);
}

}  // namespace spectra
