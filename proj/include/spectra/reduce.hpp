#pragma once

// Size reduction of a monic hermitian pencil: given p(x) = det(I + sum x_i A_i)
// with N x N matrices and p of degree d, produce d x d matrices B_i with
// p(x) = det(I + sum x_i B_i).
//
// Pipeline (each stage is exposed separately and recorded in the report):
//   1. A_i PSD and C0 = I - sum A_i PSD of rank N - d
//   2. split A_i and C0 into rank-one terms v v*
//   3. span(u) and span(v) are transversal
//   4. change of basis P = [orth(U) | orth(V)], T_i = sum m m* over the
//      v-coordinates m of A_i, scale c = |det P|^2 |det M1|^2
//   5. B_i = G^{-1/2} T_i G^{-1/2} with G = sum T_i

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spectra/determinantal.hpp"
#include "spectra/scalar.hpp"

namespace spectra {

using FloatMatrix = Eigen::MatrixXcd;
using FloatVector = Eigen::VectorXcd;

/// Monic pencil I + sum x_i A_i in floating point.
struct FloatRepresentation {
  std::size_t size = 0;
  std::vector<FloatMatrix> pencil;
};

FloatRepresentation to_float(const Representation& rep);

/// Relative thresholds. For a matrix M with spectral norm |M|:
///  psd:  eigenvalues >= -psd * (1 + |M|)
///  rank: eigen/singular values > rank * |M| count toward the rank
///        (for C0 = I - sum A_i the scale is max(1, |C0|))
///  rec:  max-entry error of the rank-one reconstruction, times max(1, |M|)
///  monic: |c det(G) - 1|
///  sym:  hermitian defect and |sum B_i - I| in max-entry norm
struct Tolerances {
  double psd = 1e-9;
  double rank = 1e-7;
  double rec = 1e-9;
  double monic = 1e-6;
  double sym = 1e-9;
};

enum class ReductionStage { Preconditions, RankOneSplit, Transversality, BuildReduced, Monicize };

const char* stage_name(ReductionStage stage);

class ReductionError : public Error {
 public:
  ReductionError(Errc code, ReductionStage stage, const std::string& what, std::size_t index = 0, double value = 0.0)
      : Error(code, what), stage_(stage), index_(index), value_(value) {}

  ReductionStage stage() const { return stage_; }
  /// 1-based matrix index for NotPSD (0 means C0), observed rank for WrongCorank.
  std::size_t index() const { return index_; }
  double value() const { return value_; }

 private:
  ReductionStage stage_;
  std::size_t index_;
  double value_;
};

struct PreconditionResult {
  std::vector<double> min_eigenvalues;
  double residual_min_eigenvalue = 0.0;
  std::size_t residual_rank = 0;
};

PreconditionResult check_preconditions(const FloatRepresentation& rep, std::size_t degree,
                                       const Tolerances& tol = {});

/// Columns sqrt(lambda) u over eigenpairs with lambda > rank * |M|, ordered by
/// increasing eigenvalue; the first entry of magnitude > 1e-12 of every u is
/// made positive real.
std::vector<FloatVector> rank_one_split(const FloatMatrix& m, const Tolerances& tol = {});

struct TransversalityResult {
  std::size_t rank_u = 0;
  std::size_t rank_v = 0;
  std::size_t rank_combined = 0;
  /// Smallest singular value of [orth(U) | orth(V)].
  double residual = 0.0;
};

TransversalityResult transversality_check(const FloatMatrix& u_cols, const FloatMatrix& v_cols,
                                          const Tolerances& tol = {});

struct ReductionReport {
  std::size_t size = 0;
  std::size_t degree = 0;
  std::size_t num_vars = 0;

  std::optional<ReductionStage> failed_stage;
  std::optional<Errc> failure_code;
  std::string failure;
  /// ReductionError::index() and value() of the failure.
  std::size_t failure_index = 0;
  double failure_value = 0.0;

  PreconditionResult preconditions;
  std::vector<std::size_t> factor_counts;
  std::size_t residual_factor_count = 0;
  double reconstruction_residual = 0.0;
  std::optional<TransversalityResult> transversality;

  std::vector<FloatMatrix> reduced;
  double scale = 0.0;
  double gram_min_eigenvalue = 0.0;

  std::vector<FloatMatrix> monic;
  double monic_residual = 0.0;
  double identity_residual = 0.0;

  bool ok() const { return !failed_stage.has_value(); }
};

/// Stages 1-4. On failure the report names the stage and the error.
ReductionReport build_reduced(const FloatRepresentation& rep, std::size_t degree, const Tolerances& tol = {});

struct MonicPencil {
  std::vector<FloatMatrix> pencil;
  double monic_residual;
  double identity_residual;
};

/// Stage 5; throws SingularGram or MonicMismatch.
MonicPencil monicize(const std::vector<FloatMatrix>& reduced, double scale, const Tolerances& tol = {});

/// Stages 1-5.
ReductionReport reduce_representation(const FloatRepresentation& rep, std::size_t degree, const Tolerances& tol = {});

/// det(a0 + sum x_i A_i) by LU; a0 defaults to the identity.
Complex pencil_determinant(const std::vector<FloatMatrix>& pencil, const std::vector<double>& x,
                           const std::optional<FloatMatrix>& a0 = std::nullopt);

}  // namespace spectra
