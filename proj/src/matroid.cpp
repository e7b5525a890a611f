#include "spectra/matroid.hpp"

#include <algorithm>

namespace spectra {

Matroid::Matroid(std::size_t n, std::vector<SubsetMask> bases)
    : n_(n), rank_(bases.empty() ? 0 : bases.front().size()), bases_(std::move(bases)) {}

bool Matroid::is_basis(SubsetMask s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

Matroid matroid_from_bases(std::size_t n, std::vector<SubsetMask> bases) {
  if (n > kMaxGroundSet)
    throw MatroidError(Errc::BoundsViolation, "ground set of size " + std::to_string(n) + " exceeds " +
                                                  std::to_string(kMaxGroundSet));
  if (bases.empty()) throw MatroidError(Errc::EmptyBases, "a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  for (SubsetMask b : bases)
    if (!b.fits(n)) throw MatroidError(Errc::BoundsViolation, "basis " + b.str() + " outside the ground set", b);

  const SubsetMask first = bases.front();
  for (SubsetMask b : bases)
    if (b.size() != first.size())
      throw MatroidError(Errc::UnequalCardinality,
                         "bases " + first.str() + " and " + b.str() + " differ in size", first, b);

  std::vector<bool> member(std::size_t{1} << n, false);
  for (SubsetMask b : bases) member[b.bits()] = true;

  for (SubsetMask b1 : bases) {
    for (SubsetMask b2 : bases) {
      const SubsetMask only1 = b1 - b2;
      const SubsetMask only2 = b2 - b1;
      for (int e : only1.elements()) {
        const SubsetMask without = b1 - SubsetMask::of({e});
        bool found = false;
        for (int f : only2.elements()) {
          if (member[(without | SubsetMask::of({f})).bits()]) {
            found = true;
            break;
          }
        }
        if (!found)
          throw MatroidError(Errc::ExchangeFailure,
                             "no exchange for element " + std::to_string(e) + " of " + b1.str() +
                                 " against " + b2.str(),
                             b1, b2, e);
      }
    }
  }
  return Matroid(n, std::move(bases));
}

Matroid uniform(std::size_t r, std::size_t n) {
  if (r == 0 || r > n || n > kMaxGroundSet)
    throw Error(Errc::BoundsViolation, "uniform(" + std::to_string(r) + "," + std::to_string(n) +
                                           ") requires 0 < r <= n <= " + std::to_string(kMaxGroundSet));
  std::vector<SubsetMask> bases;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (static_cast<std::size_t>(std::popcount(bits)) == r) bases.emplace_back(bits);
  return Matroid(n, std::move(bases));
}

Matroid vamos() {
  const SubsetMask planes[] = {
      SubsetMask::of({1, 2, 3, 4}), SubsetMask::of({1, 4, 5, 6}), SubsetMask::of({2, 3, 5, 6}),
      SubsetMask::of({1, 4, 7, 8}), SubsetMask::of({2, 3, 7, 8}),
  };
  std::vector<SubsetMask> bases;
  for (std::uint32_t bits = 0; bits < (1u << 8); ++bits) {
    if (std::popcount(bits) != 4) continue;
    if (std::find(std::begin(planes), std::end(planes), SubsetMask(bits)) != std::end(planes)) continue;
    bases.emplace_back(bits);
  }
  return matroid_from_bases(8, std::move(bases));
}

std::size_t rank(const Matroid& m, SubsetMask s) {
  if (!s.fits(m.ground_size()))
    throw Error(Errc::BoundsViolation, "set " + s.str() + " outside ground set of size " +
                                           std::to_string(m.ground_size()));
  std::size_t best = 0;
  for (SubsetMask b : m.bases()) best = std::max(best, (s & b).size());
  return best;
}

Poly bases_polynomial(const Matroid& m) {
  Poly h(m.ground_size());
  for (SubsetMask b : m.bases()) {
    Monomial mono(m.ground_size());
    for (int e : b.elements()) mono[static_cast<std::size_t>(e - 1)] = 1;
    h.add_term(mono, Rational(1));
  }
  return h;
}

std::vector<Rational> indicator(SubsetMask s, std::size_t n) {
  if (!s.fits(n)) throw Error(Errc::BoundsViolation, "set " + s.str() + " outside 1.." + std::to_string(n));
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = s.contains(i) ? 1 : 0;
  return v;
}

std::size_t rank_via_degree(const Poly& bases_poly, SubsetMask s) {
  const std::size_t n = bases_poly.num_vars();
  const std::vector<Rational> ones(n, Rational(1));
  const auto dir = indicator(s, n);
  const auto restricted = restrict_univariate(bases_poly, ones, dir);
  // h_M(1) counts the bases, so the restriction is never the zero polynomial.
  return restricted.degree().value();
}

std::size_t rank_via_degree(const Matroid& m, SubsetMask s) { return rank_via_degree(bases_polynomial(m), s); }

}  // namespace spectra
