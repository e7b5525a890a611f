#include "spectra/determinantal.hpp"

#include <bit>

namespace spectra {

void Representation::validate() const {
  const auto m = static_cast<Eigen::Index>(size);
  auto check = [&](const ExactMatrix& a, const std::string& name) {
    if (a.rows() != m || a.cols() != m)
      throw Error(Errc::ArityMismatch, name + " is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           ", expected " + std::to_string(size) + "x" + std::to_string(size));
  };
  if (a0) check(*a0, "A0");
  for (std::size_t i = 0; i < pencil.size(); ++i) check(pencil[i], "A" + std::to_string(i + 1));
}

GaussPoly expand_det_affine_complex(const Representation& rep, std::size_t max_size) {
  rep.validate();
  const std::size_t m = rep.size;
  const std::size_t n = rep.num_vars();
  if (m > max_size)
    throw Error(Errc::SizeBudgetExceeded, "matrix size " + std::to_string(m) + " exceeds " +
                                              std::to_string(max_size) + " (raise with --max-size)");

  // Entry (i, j) of the pencil as an affine polynomial in x1..xn.
  const ExactMatrix a0 = rep.constant_term();
  std::vector<GaussPoly> entry(m * m, GaussPoly(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto& e = entry[i * m + j];
      e.add_term(Monomial(n), a0(i, j));
      for (std::size_t k = 0; k < n; ++k) e.add_term(Monomial::unit(n, k), rep.pencil[k](i, j));
    }

  // minor[mask] = det of rows 0..|mask|-1 and columns mask, expanded along its last row.
  std::vector<GaussPoly> minor(std::size_t{1} << m, GaussPoly(n));
  minor[0] = GaussPoly::constant(n, GaussRational(1));
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    GaussPoly acc(n);
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::size_t col = static_cast<std::size_t>(std::countr_zero(bits));
      const auto& a = entry[row * m + col];
      const auto& sub = minor[mask & ~(1u << col)];
      if (a.is_zero() || sub.is_zero()) continue;
      const bool negative = std::popcount(mask >> (col + 1)) % 2 == 1;
      if (negative) acc -= a * sub;
      else acc += a * sub;
    }
    minor[mask] = std::move(acc);
  }
  return minor[(1u << m) - 1];
}

Poly expand_det_affine(const Representation& rep, std::size_t max_size) {
  rep.validate();
  if (rep.a0 && !is_hermitian(*rep.a0)) throw Error(Errc::NonHermitianInput, "A0 is not hermitian");
  for (std::size_t i = 0; i < rep.pencil.size(); ++i)
    if (!is_hermitian(rep.pencil[i]))
      throw Error(Errc::NonHermitianInput, "A" + std::to_string(i + 1) + " is not hermitian");
  auto real = real_part(expand_det_affine_complex(rep, max_size));
  if (!real) throw Error(Errc::IdentityFailure, "imaginary parts of a hermitian determinant did not cancel");
  return *real;
}

Poly cauchy_binet_expand(const ExactMatrix& b) {
  const auto m = static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(b.cols());
  if (m > cols)
    throw Error(Errc::ArityMismatch, "Cauchy-Binet needs rows <= cols, got " + std::to_string(m) + "x" +
                                         std::to_string(cols));
  if (cols > kMaxGroundSet)
    throw Error(Errc::SizeBudgetExceeded, "more than " + std::to_string(kMaxGroundSet) + " columns");
  Poly out(cols);
  for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    ExactMatrix sub(b.rows(), b.rows());
    Monomial mono(cols);
    Eigen::Index k = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!((mask >> j) & 1u)) continue;
      sub.col(k++) = b.col(static_cast<Eigen::Index>(j));
      mono[j] = 1;
    }
    out.add_term(mono, determinant(sub).norm());
  }
  return out;
}

RankTable arrangement_rank_table(std::span<const ExactMatrix> gens) {
  const std::size_t n = gens.size();
  if (n > kMaxArrangementSize)
    throw Error(Errc::SizeBudgetExceeded, "arrangement of " + std::to_string(n) + " subspaces exceeds " +
                                              std::to_string(kMaxArrangementSize));
  const Eigen::Index rows = n == 0 ? 0 : gens.front().rows();
  for (const auto& g : gens)
    if (g.rows() != rows) throw Error(Errc::ArityMismatch, "generators have different row counts");

  RankTable r(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Eigen::Index width = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) width += gens[i].cols();
    ExactMatrix stacked(rows, width);
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      stacked.middleCols(offset, gens[i].cols()) = gens[i];
      offset += gens[i].cols();
    }
    r[SubsetMask(mask)] = static_cast<std::int64_t>(exact_rank(std::move(stacked)));
  }
  return r;
}

PsdMatrix PsdMatrix::certify(const ExactMatrix& a) {
  if (!is_hermitian(a)) throw Error(Errc::NonHermitianInput, "PSD certificate requested for a non-hermitian matrix");
  ExactMatrix w = a;
  const Eigen::Index n = w.rows();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (Eigen::Index step = 0; step < n; ++step) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      const int sign = w(i, i).re().sign();
      if (sign < 0)
        throw Error(Errc::PsdCertificateFailure, "negative pivot " + w(i, i).re().str() + " at index " +
                                                     std::to_string(i + 1));
      if (sign > 0 && pivot < 0) pivot = i;
    }
    if (pivot < 0) {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] && !w(i, j).is_zero())
            throw Error(Errc::PsdCertificateFailure, "zero pivot with nonzero off-diagonal entry (" +
                                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      break;
    }
    done[static_cast<std::size_t>(pivot)] = true;
    const GaussRational d = w(pivot, pivot);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)] || w(i, pivot).is_zero()) continue;
      const GaussRational li = w(i, pivot) / d;
      for (Eigen::Index j = 0; j < n; ++j)
        if (!done[static_cast<std::size_t>(j)]) w(i, j) -= li * w(pivot, j);
    }
  }
  return PsdMatrix(a);
}

PsdMatrix PsdMatrix::from_gram(const ExactMatrix& v) { return PsdMatrix(v * v.adjoint()); }

PsdRankDegree psd_rank_degree_rank(std::span<const PsdMatrix> psd, SubsetMask s) {
  if (psd.empty()) throw Error(Errc::EmptySet, "no matrices given");
  if (!s.fits(psd.size())) throw Error(Errc::BoundsViolation, "subset " + s.str() + " outside the matrix list");
  const Eigen::Index m = psd.front().value().rows();
  ExactMatrix sum = ExactMatrix::Zero(m, m);
  for (std::size_t i = 0; i < psd.size(); ++i) {
    if (psd[i].value().rows() != m) throw Error(Errc::ArityMismatch, "matrices of different sizes");
    if (s.contains(i)) sum += psd[i].value();
  }
  PsdRankDegree out;
  out.elimination_rank = exact_rank(sum);
  Representation rep{static_cast<std::size_t>(m), std::nullopt, {sum}};
  out.degree_rank = expand_det_affine(rep).total_degree().value();
  if (out.elimination_rank != out.degree_rank)
    throw Error(Errc::IdentityFailure, "rank " + std::to_string(out.elimination_rank) + " differs from degree " +
                                           std::to_string(out.degree_rank));
  return out;
}

std::optional<RepresentationDifference> verify_representation(const GaussPoly& p, const Representation& rep,
                                                              std::size_t max_size) {
  if (p.num_vars() != rep.num_vars())
    throw Error(Errc::ArityMismatch, "polynomial in " + std::to_string(p.num_vars()) + " variables, pencil of " +
                                         std::to_string(rep.num_vars()) + " matrices");
  const GaussPoly det = expand_det_affine_complex(rep, max_size);
  const GrlexLess less;
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = det.terms().begin(), be = det.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && less(a->first, b->first))) return RepresentationDifference{a->first, a->second, 0};
    if (a == ae || less(b->first, a->first)) return RepresentationDifference{b->first, 0, b->second};
    if (!(a->second == b->second)) return RepresentationDifference{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace spectra
