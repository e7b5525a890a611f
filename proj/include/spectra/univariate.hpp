#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectra/scalar.hpp"

namespace spectra {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UnivariatePoly constant(Rational c) { return UnivariatePoly({std::move(c)}); }
  /// a + b t
  static UnivariatePoly linear(Rational a, Rational b) { return UnivariatePoly({std::move(a), std::move(b)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
  }

  UnivariatePoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return UnivariatePoly(std::move(d));
  }

  UnivariatePoly operator-() const {
    UnivariatePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UnivariatePoly& operator+=(const UnivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UnivariatePoly& operator-=(const UnivariatePoly& o) { return *this += -o; }
  UnivariatePoly& operator*=(const Rational& s) {
    if (s.is_zero()) coeffs_.clear();
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(UnivariatePoly a, const Rational& s) { return a *= s; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePoly(std::move(out));
  }
  UnivariatePoly& operator*=(const UnivariatePoly& o) { return *this = *this * o; }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  /// Euclidean division over Q: returns (quotient, remainder).
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const {
    if (divisor.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Rational> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {UnivariatePoly(), *this};
    std::vector<Rational> quot(rem.size() - dd);
    const Rational& lead = divisor.leading();
    for (std::size_t k = rem.size(); k-- > dd;) {
      if (rem[k].is_zero()) continue;
      Rational q = rem[k] / lead;
      for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
      quot[k - dd] = std::move(q);
    }
    rem.resize(dd);
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
  }

  /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
  UnivariatePoly primitive() const {
    if (is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
      mpz_class scaled = c.num() * (den_lcm / c.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(mpq_class(den_lcm, g));
    if (leading().sign() < 0) factor = -factor;
    return *this * factor;
  }

  /// Monic gcd over Q (zero if both inputs are zero).
  friend UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
      UnivariatePoly r = a.divmod(b).second.primitive();
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace spectra
