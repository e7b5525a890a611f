#include "spectra/real_check.hpp"

namespace spectra {
namespace {

// Rescale by a positive rational so that the coefficients are coprime integers.
UnivariatePoly positive_normalize(const UnivariatePoly& q) {
  if (q.is_zero()) return q;
  UnivariatePoly r = q.primitive();
  return q.leading().sign() < 0 ? -r : r;
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void check_length(std::span<const Rational> v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw Error(Errc::ArityMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                         ", expected " + std::to_string(n));
}

}  // namespace

std::size_t SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : polys) signs.push_back(p.is_zero() ? 0 : p.leading().sign());
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : polys) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = p.leading().sign();
    if (*p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

SturmChain sturm_chain(const UnivariatePoly& q) {
  SturmChain chain;
  if (q.is_zero()) return chain;
  chain.polys.push_back(positive_normalize(q));
  UnivariatePoly d = q.derivative();
  if (d.is_zero()) return chain;
  chain.polys.push_back(positive_normalize(d));
  while (true) {
    const auto& a = chain.polys[chain.polys.size() - 2];
    const auto& b = chain.polys.back();
    UnivariatePoly r = -a.divmod(b).second;
    if (r.is_zero()) break;
    chain.polys.push_back(positive_normalize(r));
  }
  return chain;
}

UnivariatePoly squarefree_part(const UnivariatePoly& q) {
  if (q.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of the zero polynomial");
  const UnivariatePoly g = gcd(q, q.derivative());
  if (g.is_zero()) return q.primitive();
  return q.divmod(g).first.primitive();
}

bool is_real_rooted(const UnivariatePoly& q) {
  if (q.is_zero() || *q.degree() == 0) return true;
  const UnivariatePoly sqf = squarefree_part(q);
  return sturm_chain(sqf).distinct_real_roots() == *sqf.degree();
}

std::vector<DirectionVerdict> rz_check(const Poly& p, std::span<const std::vector<Rational>> directions) {
  const std::vector<Rational> origin(p.num_vars(), Rational(0));
  std::vector<DirectionVerdict> out;
  for (const auto& x : directions) {
    check_length(x, p.num_vars(), "direction");
    UnivariatePoly q = restrict_univariate(p, origin, x);
    const bool ok = is_real_rooted(q);
    out.push_back({x, std::move(q), ok});
  }
  return out;
}

std::vector<DirectionVerdict> hyperbolicity_check(const Poly& h, std::span<const Rational> e,
                                                  std::span<const std::vector<Rational>> points) {
  check_length(e, h.num_vars(), "e");
  if (!h.is_homogeneous()) throw Error(Errc::NotHomogeneous, "h has terms of different total degree");
  if (eval(h, e).is_zero()) throw Error(Errc::ZeroAtE, "h(e) = 0");
  std::vector<DirectionVerdict> out;
  for (const auto& x : points) {
    check_length(x, h.num_vars(), "point");
    UnivariatePoly q = restrict_univariate(h, x, e);
    const bool ok = is_real_rooted(q);
    out.push_back({x, std::move(q), ok});
  }
  return out;
}

std::size_t hyperbolic_rank(const Poly& h, std::span<const Rational> e, std::span<const Rational> x) {
  check_length(e, h.num_vars(), "e");
  check_length(x, h.num_vars(), "x");
  if (eval(h, e).is_zero()) throw Error(Errc::ZeroAtE, "h(e) = 0");
  std::vector<Poly> images;
  images.reserve(h.num_vars());
  const Poly t = Poly::variable(1, 0);
  for (std::size_t i = 0; i < h.num_vars(); ++i) images.push_back(Poly::constant(1, e[i]) + t * x[i]);
  return compose(h, images).total_degree().value();
}

std::vector<RankComparison> rank_e_independence(const Poly& h, std::span<const Rational> e1,
                                                std::span<const Rational> e2,
                                                std::span<const std::vector<Rational>> xs) {
  std::vector<RankComparison> out;
  for (const auto& x : xs) out.push_back({x, hyperbolic_rank(h, e1, x), hyperbolic_rank(h, e2, x)});
  return out;
}

}  // namespace spectra
