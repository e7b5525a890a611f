#include "spectra/polymatroid.hpp"

#include <algorithm>
#include <limits>

namespace spectra {

RankTable rank_table(const Matroid& m) {
  RankTable r(m.ground_size());
  for (std::uint32_t bits = 0; bits < (1u << m.ground_size()); ++bits)
    r[SubsetMask(bits)] = static_cast<std::int64_t>(rank(m, SubsetMask(bits)));
  return r;
}

const char* axiom_name(PolymatroidAxiom axiom) {
  switch (axiom) {
    case PolymatroidAxiom::Normalized: return "normalized";
    case PolymatroidAxiom::Monotone: return "monotone";
    case PolymatroidAxiom::Submodular: return "submodular";
  }
  return "unknown";
}

std::vector<PolymatroidViolation> check_polymatroid(const RankTable& r) {
  std::vector<PolymatroidViolation> out;
  const std::size_t n = r.ground_size();
  const std::uint32_t count = 1u << n;

  if (r[SubsetMask(0)] != 0) out.push_back({PolymatroidAxiom::Normalized, {}, {}, r[SubsetMask(0)], 0});

  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;
      const SubsetMask small(s), big(s | (1u << i));
      if (r[small] > r[big]) out.push_back({PolymatroidAxiom::Monotone, small, big, r[small], r[big]});
    }
  }

  if (n <= 12) {
    for (std::uint32_t s = 0; s < count; ++s) {
      for (std::uint32_t t = s + 1; t < count; ++t) {
        if ((s & t) == s || (s & t) == t) continue;
        const SubsetMask a(s), b(t);
        const std::int64_t lhs = r[a | b] + r[a & b];
        const std::int64_t rhs = r[a] + r[b];
        if (lhs > rhs) out.push_back({PolymatroidAxiom::Submodular, a, b, lhs, rhs});
      }
    }
  } else {
    for (std::uint32_t s = 0; s < count; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((s >> i) & 1u) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if ((s >> j) & 1u) continue;
          const SubsetMask a(s | (1u << i)), b(s | (1u << j));
          const std::int64_t lhs = r[a | b] + r[a & b];
          const std::int64_t rhs = r[a] + r[b];
          if (lhs > rhs) out.push_back({PolymatroidAxiom::Submodular, a, b, lhs, rhs});
        }
      }
    }
  }
  return out;
}

IngletonReport ingleton_check(const RankTable& r, const IngletonQuadruple& q) {
  const SubsetMask full = SubsetMask::full(r.ground_size());
  for (SubsetMask s : {q.s1, q.s2, q.s3, q.s4})
    if (!s.is_subset_of(full))
      throw Error(Errc::BoundsViolation, "quadruple set " + s.str() + " outside ground set of size " +
                                             std::to_string(r.ground_size()));
  const auto& [s1, s2, s3, s4] = q;
  const std::int64_t lhs = r[s1 | s2] + r[s1 | s3 | s4] + r[s3] + r[s4] + r[s2 | s3 | s4];
  const std::int64_t rhs = r[s1 | s3] + r[s1 | s4] + r[s2 | s3] + r[s2 | s4] + r[s3 | s4];
  return {q, lhs, rhs};
}

std::vector<IngletonReport> ingleton_scan(const RankTable& r, ScanMode mode, std::size_t full_limit) {
  std::vector<IngletonReport> out;
  const std::size_t n = r.ground_size();
  auto consider = [&](const IngletonQuadruple& q) {
    auto report = ingleton_check(r, q);
    if (report.deficit() > 0) out.push_back(report);
  };

  switch (mode) {
    case ScanMode::VamosQuadruple: {
      if (n < 8)
        throw Error(Errc::BoundsViolation, "the Vamos quadruple needs a ground set of at least 8 elements");
      consider(IngletonQuadruple::vamos());
      break;
    }
    case ScanMode::DisjointPairs: {
      std::vector<SubsetMask> small;
      for (std::uint32_t bits = 1; bits < (1u << n); ++bits)
        if (std::popcount(bits) <= 2) small.emplace_back(bits);
      for (SubsetMask a : small)
        for (SubsetMask b : small) {
          if (!(a < b) || !(a & b).empty()) continue;
          for (SubsetMask c : small) {
            if (!(a & c).empty() || !(b & c).empty()) continue;
            for (SubsetMask d : small) {
              if (!(c < d) || !(d & (a | b | c)).empty()) continue;
              consider({a, b, c, d});
            }
          }
        }
      break;
    }
    case ScanMode::Full: {
      if (n > full_limit)
        throw Error(Errc::ScanBudgetExceeded, "full Ingleton scan is limited to n <= " + std::to_string(full_limit) +
                                                  " (got n=" + std::to_string(n) +
                                                  "); raise with --full-scan-limit or use --scan disjoint-pairs");
      const std::uint32_t count = 1u << n;
      for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = a; b < count; ++b)
          for (std::uint32_t c = 0; c < count; ++c)
            for (std::uint32_t d = c; d < count; ++d)
              consider({SubsetMask(a), SubsetMask(b), SubsetMask(c), SubsetMask(d)});
      break;
    }
  }
  return out;
}

RankTable scale(const RankTable& r, std::int64_t factor) {
  std::vector<std::int64_t> values = r.values();
  for (auto& v : values) v *= factor;
  return RankTable(r.ground_size(), std::move(values));
}

std::int64_t support_rank(const LatticePointSet& points, SubsetMask s) {
  if (points.empty()) throw Error(Errc::EmptySet, "support_rank of an empty lattice set");
  if (!s.fits(points.dim()))
    throw Error(Errc::BoundsViolation, "subset " + s.str() + " outside dimension " + std::to_string(points.dim()));
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& alpha : points) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (s.contains(i)) sum += alpha[i];
    best = std::max(best, sum);
  }
  return best;
}

RankTable hyperbolic_rank_table(const Poly& h, std::span<const std::vector<Rational>> directions,
                                std::span<const Rational> e) {
  if (e.size() != h.num_vars()) throw Error(Errc::ArityMismatch, "base point length differs from variable count");
  for (const auto& d : directions)
    if (d.size() != h.num_vars()) throw Error(Errc::ArityMismatch, "direction length differs from variable count");
  if (eval(h, e).is_zero()) throw Error(Errc::ZeroAtE, "h vanishes at the base point e");

  const std::size_t n = directions.size();
  RankTable r(n);
  std::vector<std::vector<Rational>> sums(std::size_t{1} << n, std::vector<Rational>(h.num_vars()));
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(bits));
    const auto& rest = sums[bits & (bits - 1)];
    auto& x = sums[bits];
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = rest[k] + directions[low][k];
    r[SubsetMask(bits)] = static_cast<std::int64_t>(restrict_univariate(h, e, x).degree().value());
  }
  return r;
}

}  // namespace spectra
