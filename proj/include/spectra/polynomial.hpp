#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Polynomial<Scalar> is templated on the coefficient field: Rational for the
// real case, GaussRational for hermitian pencils. Widening Rational ->
// GaussRational is explicit (widen), narrowing back is checked (real_part).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/scalar.hpp"
#include "spectra/univariate.hpp"

namespace spectra {

/// Exponent vector of a monomial; componentwise <= is the product order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t num_vars, std::size_t var) {
    Monomial m(num_vars);
    m.exps_[var] = 1;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(i + 1);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Canonical term order: ascending total degree, ties broken so that x1 > x2 > ...
/// (exponent vectors compared lexicographically, larger first).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
  }
};

template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Scalar& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
  }
  static Polynomial variable(std::size_t num_vars, std::size_t var) {
    Polynomial p(num_vars);
    p.add_term(Monomial::unit(num_vars, var), Scalar(1));
    return p;
  }
  /// Builds from an unordered term list; duplicate exponent vectors are rejected.
  static Polynomial from_terms(std::size_t num_vars, const std::vector<std::pair<Monomial, Scalar>>& terms) {
    Polynomial p(num_vars);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& [mono, c] : terms) {
      if (mono.size() != num_vars)
        throw Error(Errc::ArityMismatch, "exponent vector of length " + std::to_string(mono.size()) +
                                             " in a polynomial of " + std::to_string(num_vars) + " variables");
      if (!seen.insert(mono.exponents()).second)
        throw Error(Errc::ParseError, "duplicate exponent vector " + mono.str());
      p.add_term(mono, c);
    }
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// nullopt for the zero polynomial.
  std::optional<std::uint64_t> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.total_degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.total_degree() == terms_.rbegin()->first.total_degree();
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial r(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::ostringstream os;
      os << c;
      s += os.str() + "*" + m.str();
    }
    return s;
  }

 private:
  static bool is_zero_scalar(const Scalar& c) { return spectra::is_zero(c); }

  void check_arity(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_)
      throw Error(Errc::ArityMismatch, "polynomials in " + std::to_string(num_vars_) + " and " +
                                           std::to_string(o.num_vars_) + " variables");
  }

  std::size_t num_vars_;
  Terms terms_;
};

using Poly = Polynomial<Rational>;
using GaussPoly = Polynomial<GaussRational>;

template <class S>
Polynomial<S> poly_add(const Polynomial<S>& a, const Polynomial<S>& b) { return a + b; }

template <class S>
Polynomial<S> poly_mul(const Polynomial<S>& a, const Polynomial<S>& b) { return a * b; }

/// p^n by repeated squaring; p^0 = 1.
template <class S>
Polynomial<S> poly_pow(const Polynomial<S>& p, unsigned n) {
  Polynomial<S> result = Polynomial<S>::constant(p.num_vars(), S(1));
  Polynomial<S> base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

/// Substitutes images[i] for variable i.
template <class S>
Polynomial<S> compose(const Polynomial<S>& p, std::span<const Polynomial<S>> images) {
  if (images.size() != p.num_vars())
    throw Error(Errc::ArityMismatch, "compose: " + std::to_string(images.size()) + " images for " +
                                         std::to_string(p.num_vars()) + " variables");
  std::size_t target_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images)
    if (img.num_vars() != target_vars) throw Error(Errc::ArityMismatch, "compose: images disagree on arity");

  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial<S>>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial<S>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<S>::constant(target_vars, S(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial<S> result(target_vars);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial<S> term = Polynomial<S>::constant(target_vars, c);
    for (std::size_t i = 0; i < mono.size() && !term.is_zero(); ++i)
      if (mono[i] > 0) term *= power(i, mono[i]);
    result += term;
  }
  return result;
}

template <class S>
Polynomial<S> compose(const Polynomial<S>& p, const std::vector<Polynomial<S>>& images) {
  return compose(p, std::span<const Polynomial<S>>(images));
}

/// p(x + shift), e.g. shift = 1 gives the real-zero form of a hyperbolic polynomial.
template <class S>
Polynomial<S> shift(const Polynomial<S>& p, std::span<const Rational> offset) {
  if (offset.size() != p.num_vars()) throw Error(Errc::ArityMismatch, "shift: offset length");
  std::vector<Polynomial<S>> images;
  for (std::size_t i = 0; i < p.num_vars(); ++i)
    images.push_back(Polynomial<S>::variable(p.num_vars(), i) +
                     Polynomial<S>::constant(p.num_vars(), scalar_cast<S>(offset[i])));
  return compose(p, images);
}

/// t -> p(base + t * dir) as a dense univariate polynomial.
inline UnivariatePoly restrict_univariate(const Poly& p, std::span<const Rational> base,
                                          std::span<const Rational> dir) {
  if (base.size() != p.num_vars() || dir.size() != p.num_vars())
    throw Error(Errc::ArityMismatch, "restrict_univariate: vector lengths must equal " +
                                         std::to_string(p.num_vars()));
  std::vector<std::vector<UnivariatePoly>> powers(p.num_vars());
  auto power = [&](std::size_t i, std::uint32_t k) -> const UnivariatePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(UnivariatePoly::constant(1));
    while (cache.size() <= k) cache.push_back(cache.back() * UnivariatePoly::linear(base[i], dir[i]));
    return cache[k];
  };
  UnivariatePoly result;
  for (const auto& [mono, c] : p.terms()) {
    UnivariatePoly term = UnivariatePoly::constant(c);
    for (std::size_t i = 0; i < mono.size() && !term.is_zero(); ++i)
      if (mono[i] > 0) term *= power(i, mono[i]);
    result += term;
  }
  return result;
}

/// Evaluates p at a point in any scalar type the coefficients widen into.
template <class T, class S>
T eval(const Polynomial<S>& p, std::span<const T> point) {
  if (point.size() != p.num_vars())
    throw Error(Errc::ArityMismatch, "eval: point of length " + std::to_string(point.size()) + " for " +
                                         std::to_string(p.num_vars()) + " variables");
  std::vector<std::vector<T>> powers(p.num_vars());
  auto power = [&](std::size_t i, std::uint32_t k) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(T(1));
    while (cache.size() <= k) cache.push_back(cache.back() * point[i]);
    return cache[k];
  };
  T acc(0);
  for (const auto& [mono, c] : p.terms()) {
    T term = scalar_cast<T>(c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) term *= power(i, mono[i]);
    acc += term;
  }
  return acc;
}

template <class T, class S>
T eval(const Polynomial<S>& p, const std::vector<T>& point) {
  return eval<T, S>(p, std::span<const T>(point));
}

inline GaussPoly widen(const Poly& p) {
  GaussPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, GaussRational(c));
  return out;
}

/// Narrowing to real coefficients; nullopt when some imaginary part survives.
inline std::optional<Poly> real_part(const GaussPoly& p) {
  Poly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_real()) return std::nullopt;
    out.add_term(m, c.re());
  }
  return out;
}

}  // namespace spectra
