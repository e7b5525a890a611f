#include "spectra/reduce.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {
namespace {

using EigenSolver = Eigen::SelfAdjointEigenSolver<FloatMatrix>;

double spectral_norm(const Eigen::VectorXd& eigenvalues) {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

double max_entry(const FloatMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void normalize_phase(FloatVector& u) {
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (std::abs(u(k)) > 1e-12) {
      u *= std::conj(u(k)) / std::abs(u(k));
      u(k) = Complex(u(k).real(), 0.0);
      return;
    }
  }
}

std::vector<FloatVector> split_above(const FloatMatrix& m, double threshold) {
  EigenSolver eig(m);
  std::vector<FloatVector> out;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double lambda = eig.eigenvalues()(k);
    if (lambda <= threshold) continue;
    FloatVector u = eig.eigenvectors().col(k);
    normalize_phase(u);
    out.push_back(std::sqrt(lambda) * u);
  }
  return out;
}

FloatMatrix hermitize(const FloatMatrix& m) { return (m + m.adjoint()) / 2.0; }

FloatMatrix columns(const std::vector<FloatVector>& vs, Eigen::Index rows) {
  FloatMatrix out(rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = vs[k];
  return out;
}

/// Orthonormal basis of the column span (left singular vectors above threshold).
FloatMatrix orthonormal_basis(const FloatMatrix& cols, double rank_tol, std::size_t* rank_out = nullptr) {
  if (cols.cols() == 0) {
    if (rank_out) *rank_out = 0;
    return FloatMatrix(cols.rows(), 0);
  }
  Eigen::JacobiSVD<FloatMatrix> svd(cols, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(1.0, sv(0));
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  if (rank_out) *rank_out = static_cast<std::size_t>(r);
  return svd.matrixU().leftCols(r);
}

void check_hermitian(const FloatMatrix& m, std::size_t index, const Tolerances& tol) {
  const double defect = max_entry(m - m.adjoint());
  if (m.rows() != m.cols() || defect > tol.sym * (1.0 + max_entry(m)))
    throw ReductionError(Errc::NonHermitianInput, ReductionStage::Preconditions,
                         "A" + std::to_string(index) + " is not hermitian (defect " + std::to_string(defect) + ")",
                         index, defect);
}

FloatMatrix residual_matrix(const FloatRepresentation& rep) {
  const auto n = static_cast<Eigen::Index>(rep.size);
  FloatMatrix c0 = FloatMatrix::Identity(n, n);
  for (const auto& a : rep.pencil) c0 -= a;
  return hermitize(c0);
}

// C0 sits next to the identity, so its rank threshold never drops below tol.rank.
double residual_rank_threshold(const Eigen::VectorXd& eigenvalues, const Tolerances& tol) {
  return tol.rank * std::max(1.0, spectral_norm(eigenvalues));
}

}  // namespace

const char* stage_name(ReductionStage stage) {
  switch (stage) {
    case ReductionStage::Preconditions: return "preconditions";
    case ReductionStage::RankOneSplit: return "rank_one_split";
    case ReductionStage::Transversality: return "transversality";
    case ReductionStage::BuildReduced: return "build_reduced";
    case ReductionStage::Monicize: return "monicize";
  }
  return "unknown";
}

FloatRepresentation to_float(const Representation& rep) {
  rep.validate();
  if (rep.a0 && !(*rep.a0 == ExactMatrix(ExactMatrix::Identity(rep.a0->rows(), rep.a0->cols()))))
    throw Error(Errc::ArityMismatch, "size reduction needs a monic pencil (A0 = I)");
  FloatRepresentation out{rep.size, {}};
  for (const auto& a : rep.pencil) out.pencil.push_back(a.unaryExpr([](const GaussRational& z) { return z.to_complex(); }));
  return out;
}

PreconditionResult check_preconditions(const FloatRepresentation& rep, std::size_t degree, const Tolerances& tol) {
  if (degree < 1 || degree > rep.size)
    throw ReductionError(Errc::ArityMismatch, ReductionStage::Preconditions,
                         "degree " + std::to_string(degree) + " outside 1.." + std::to_string(rep.size));
  const auto n = static_cast<Eigen::Index>(rep.size);
  PreconditionResult result;
  for (std::size_t j = 0; j < rep.pencil.size(); ++j) {
    const auto& a = rep.pencil[j];
    if (a.rows() != n || a.cols() != n)
      throw ReductionError(Errc::ArityMismatch, ReductionStage::Preconditions,
                           "A" + std::to_string(j + 1) + " has the wrong size");
    check_hermitian(a, j + 1, tol);
    EigenSolver eig(hermitize(a), Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues()(0);
    result.min_eigenvalues.push_back(lo);
    if (lo < -tol.psd * (1.0 + spectral_norm(eig.eigenvalues())))
      throw ReductionError(Errc::NotPSD, ReductionStage::Preconditions,
                           "A" + std::to_string(j + 1) + " has eigenvalue " + std::to_string(lo), j + 1, lo);
  }

  EigenSolver eig(residual_matrix(rep), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  result.residual_min_eigenvalue = ev(0);
  if (ev(0) < -tol.psd * (1.0 + spectral_norm(ev)))
    throw ReductionError(Errc::NotPSD, ReductionStage::Preconditions,
                         "I - sum A_j has eigenvalue " + std::to_string(ev(0)), 0, ev(0));
  const double threshold = residual_rank_threshold(ev, tol);
  result.residual_rank = static_cast<std::size_t>((ev.array() > threshold).count());
  if (result.residual_rank != rep.size - degree)
    throw ReductionError(Errc::WrongCorank, ReductionStage::Preconditions,
                         "rank(I - sum A_j) = " + std::to_string(result.residual_rank) + ", expected " +
                             std::to_string(rep.size - degree),
                         result.residual_rank);
  return result;
}

std::vector<FloatVector> rank_one_split(const FloatMatrix& m, const Tolerances& tol) {
  EigenSolver eig(hermitize(m));
  const double norm = spectral_norm(eig.eigenvalues());
  if (m.size() > 0 && eig.eigenvalues()(0) < -tol.psd * (1.0 + norm))
    throw ReductionError(Errc::NotPSD, ReductionStage::RankOneSplit,
                         "matrix has eigenvalue " + std::to_string(eig.eigenvalues()(0)), 0, eig.eigenvalues()(0));
  return split_above(m, tol.rank * norm);
}

TransversalityResult transversality_check(const FloatMatrix& u_cols, const FloatMatrix& v_cols,
                                          const Tolerances& tol) {
  if (u_cols.rows() != v_cols.rows())
    throw ReductionError(Errc::ArityMismatch, ReductionStage::Transversality, "U and V live in different spaces");
  const auto n = static_cast<std::size_t>(u_cols.rows());
  TransversalityResult result;
  const FloatMatrix qu = orthonormal_basis(u_cols, tol.rank, &result.rank_u);
  const FloatMatrix qv = orthonormal_basis(v_cols, tol.rank, &result.rank_v);
  FloatMatrix combined(u_cols.rows(), u_cols.cols() + v_cols.cols());
  combined << u_cols, v_cols;
  orthonormal_basis(combined, tol.rank, &result.rank_combined);

  FloatMatrix q(u_cols.rows(), qu.cols() + qv.cols());
  q << qu, qv;
  if (q.cols() > 0) {
    Eigen::JacobiSVD<FloatMatrix> svd(q);
    result.residual = svd.singularValues().minCoeff();
  }
  if (result.rank_u + result.rank_v != result.rank_combined || result.rank_combined != n) {
    const auto deficit = static_cast<double>(result.rank_u + result.rank_v) - static_cast<double>(result.rank_combined);
    throw ReductionError(Errc::TransversalityFailure, ReductionStage::Transversality,
                         "rank(U) + rank(V) = " + std::to_string(result.rank_u + result.rank_v) +
                             ", rank([U|V]) = " + std::to_string(result.rank_combined) + ", N = " + std::to_string(n),
                         result.rank_combined, deficit);
  }
  return result;
}

ReductionReport build_reduced(const FloatRepresentation& rep, std::size_t degree, const Tolerances& tol) {
  ReductionReport report;
  report.size = rep.size;
  report.degree = degree;
  report.num_vars = rep.pencil.size();
  const auto n = static_cast<Eigen::Index>(rep.size);

  ReductionStage stage = ReductionStage::Preconditions;
  try {
    report.preconditions = check_preconditions(rep, degree, tol);

    stage = ReductionStage::RankOneSplit;
    std::vector<FloatVector> vs;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < rep.pencil.size(); ++i) {
      const FloatMatrix a = hermitize(rep.pencil[i]);
      auto parts = rank_one_split(a, tol);
      FloatMatrix rebuilt = FloatMatrix::Zero(n, n);
      for (const auto& v : parts) rebuilt += v * v.adjoint();
      report.reconstruction_residual = std::max(report.reconstruction_residual, max_entry(rebuilt - a));
      report.factor_counts.push_back(parts.size());
      for (auto& v : parts) {
        vs.push_back(std::move(v));
        origin.push_back(i);
      }
    }
    const FloatMatrix c0 = residual_matrix(rep);
    EigenSolver c0_eig(c0, Eigen::EigenvaluesOnly);
    const auto us = split_above(c0, residual_rank_threshold(c0_eig.eigenvalues(), tol));
    report.residual_factor_count = us.size();
    {
      FloatMatrix rebuilt = FloatMatrix::Zero(n, n);
      for (const auto& u : us) rebuilt += u * u.adjoint();
      report.reconstruction_residual = std::max(report.reconstruction_residual, max_entry(rebuilt - c0));
    }
    double scale_norm = 1.0;
    for (const auto& a : rep.pencil) scale_norm = std::max(scale_norm, max_entry(a));
    if (report.reconstruction_residual > tol.rec * scale_norm)
      throw ReductionError(Errc::IdentityFailure, ReductionStage::RankOneSplit,
                           "rank-one terms reconstruct the pencil only to " +
                               std::to_string(report.reconstruction_residual),
                           0, report.reconstruction_residual);

    stage = ReductionStage::Transversality;
    const FloatMatrix u_cols = columns(us, n);
    const FloatMatrix v_cols = columns(vs, n);
    report.transversality = transversality_check(u_cols, v_cols, tol);

    stage = ReductionStage::BuildReduced;
    const FloatMatrix qu = orthonormal_basis(u_cols, tol.rank);
    const FloatMatrix qv = orthonormal_basis(v_cols, tol.rank);
    if (static_cast<std::size_t>(qv.cols()) != degree || static_cast<std::size_t>(qu.cols()) != us.size())
      throw ReductionError(Errc::WrongCorank, ReductionStage::BuildReduced,
                           "span of the pencil has dimension " + std::to_string(qv.cols()) + ", expected " +
                               std::to_string(degree),
                           static_cast<std::size_t>(qv.cols()));
    FloatMatrix p(n, n);
    p << qu, qv;
    // [U | V] = P * blockdiag(M1, M2)
    const FloatMatrix m1 = qu.adjoint() * u_cols;
    const FloatMatrix m2 = qv.adjoint() * v_cols;
    const auto d = static_cast<Eigen::Index>(degree);
    report.reduced.assign(rep.pencil.size(), FloatMatrix::Zero(d, d));
    for (Eigen::Index k = 0; k < m2.cols(); ++k)
      report.reduced[origin[static_cast<std::size_t>(k)]] += m2.col(k) * m2.col(k).adjoint();
    const double det_m1 = m1.size() == 0 ? 1.0 : std::abs(m1.determinant());
    report.scale = std::norm(p.determinant()) * det_m1 * det_m1;

    FloatMatrix gram = FloatMatrix::Zero(d, d);
    for (const auto& t : report.reduced) gram += t;
    EigenSolver gram_eig(hermitize(gram), Eigen::EigenvaluesOnly);
    report.gram_min_eigenvalue = gram_eig.eigenvalues()(0);
    if (report.gram_min_eigenvalue <= tol.rank * std::max(1.0, spectral_norm(gram_eig.eigenvalues())))
      throw ReductionError(Errc::SingularGram, ReductionStage::BuildReduced,
                           "sum of T_i has eigenvalue " + std::to_string(report.gram_min_eigenvalue), 0,
                           report.gram_min_eigenvalue);
  } catch (const ReductionError& e) {
    report.failed_stage = e.stage();
    report.failure_code = e.code();
    report.failure = e.what();
    report.failure_index = e.index();
    report.failure_value = e.value();
  } catch (const Error& e) {
    report.failed_stage = stage;
    report.failure_code = e.code();
    report.failure = e.what();
  }
  return report;
}

MonicPencil monicize(const std::vector<FloatMatrix>& reduced, double scale, const Tolerances& tol) {
  if (reduced.empty()) throw ReductionError(Errc::SingularGram, ReductionStage::Monicize, "no matrices");
  const Eigen::Index d = reduced.front().rows();
  FloatMatrix gram = FloatMatrix::Zero(d, d);
  for (const auto& t : reduced) gram += t;
  EigenSolver eig(hermitize(gram));
  const auto& ev = eig.eigenvalues();
  if (ev(0) <= tol.rank * std::max(1.0, spectral_norm(ev)))
    throw ReductionError(Errc::SingularGram, ReductionStage::Monicize,
                         "sum of T_i has eigenvalue " + std::to_string(ev(0)), 0, ev(0));
  const FloatMatrix inv_sqrt =
      eig.eigenvectors() * ev.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();

  MonicPencil out;
  FloatMatrix sum = FloatMatrix::Zero(d, d);
  for (const auto& t : reduced) {
    out.pencil.push_back(hermitize(inv_sqrt * t * inv_sqrt));
    sum += out.pencil.back();
  }
  const double det_gram = ev.prod();
  out.monic_residual = std::abs(scale * det_gram - 1.0);
  out.identity_residual = max_entry(sum - FloatMatrix::Identity(d, d));
  if (out.monic_residual > tol.monic)
    throw ReductionError(Errc::MonicMismatch, ReductionStage::Monicize,
                         "c * det(sum T_i) = " + std::to_string(scale * det_gram) + ", expected 1", 0,
                         out.monic_residual);
  if (out.identity_residual > tol.sym * std::max(1.0, spectral_norm(ev)))
    throw ReductionError(Errc::IdentityFailure, ReductionStage::Monicize,
                         "sum of B_i differs from I by " + std::to_string(out.identity_residual), 0,
                         out.identity_residual);
  return out;
}

ReductionReport reduce_representation(const FloatRepresentation& rep, std::size_t degree, const Tolerances& tol) {
  ReductionReport report = build_reduced(rep, degree, tol);
  if (!report.ok()) return report;
  try {
    MonicPencil monic = monicize(report.reduced, report.scale, tol);
    report.monic = std::move(monic.pencil);
    report.monic_residual = monic.monic_residual;
    report.identity_residual = monic.identity_residual;
  } catch (const ReductionError& e) {
    report.failed_stage = e.stage();
    report.failure_code = e.code();
    report.failure = e.what();
    report.failure_index = e.index();
    report.failure_value = e.value();
  }
  return report;
}

Complex pencil_determinant(const std::vector<FloatMatrix>& pencil, const std::vector<double>& x,
                           const std::optional<FloatMatrix>& a0) {
  if (pencil.size() != x.size()) throw Error(Errc::ArityMismatch, "point length differs from pencil length");
  const Eigen::Index m = pencil.empty() ? (a0 ? a0->rows() : 0) : pencil.front().rows();
  FloatMatrix acc = a0 ? *a0 : FloatMatrix(FloatMatrix::Identity(m, m));
  for (std::size_t i = 0; i < pencil.size(); ++i) acc += x[i] * pencil[i];
  return m == 0 ? Complex(1.0) : acc.partialPivLu().determinant();
}

}  // namespace spectra
