#pragma once

// Exact scalar types: arbitrary-precision rationals and Gaussian rationals,
// plus the Eigen glue needed to store them in dense Eigen matrices.

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/error.hpp"

namespace spectra {

using Complex = std::complex<double>;

/// Reduced fraction num/den with den > 0. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw Error(Errc::ParseError, "zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Accepts "a", "-a", "a/b" with integer a, b (b != 0).
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s, 10)));
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
      return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
      throw Error(Errc::ParseError, "not a rational: '" + s + "'");
    }
  }

  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  const mpq_class& mpq() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational conj(const Rational& r) { return r; }
inline Rational real(const Rational& r) { return r; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& r) { return r * r; }

/// re + i*im over the rationals.
class GaussRational {
 public:
  GaussRational() = default;
  template <std::integral I>
  GaussRational(I value) : re_(value) {}  // NOLINT(implicit)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational conjugate() const { return {re_, -im_}; }
  Complex to_complex() const { return {re_.to_double(), im_.to_double()}; }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("GaussRational division by zero");
    *this *= o.conjugate();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
    return os << '(' << z.re_ << (z.im_.sign() < 0 ? "" : "+") << z.im_ << "i)";
  }

 private:
  Rational re_;
  Rational im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conjugate(); }
inline Rational real(const GaussRational& z) { return z.re(); }
inline Rational imag(const GaussRational& z) { return z.im(); }
inline Rational abs2(const GaussRational& z) { return z.norm(); }

// Uniform helpers used by the templated algorithms.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

template <class To>
To scalar_cast(const Rational& r);
template <class To>
To scalar_cast(const GaussRational& z);

template <>
inline Rational scalar_cast<Rational>(const Rational& r) { return r; }
template <>
inline GaussRational scalar_cast<GaussRational>(const Rational& r) { return GaussRational(r); }
template <>
inline Complex scalar_cast<Complex>(const Rational& r) { return {r.to_double(), 0.0}; }
template <>
inline double scalar_cast<double>(const Rational& r) { return r.to_double(); }
template <>
inline GaussRational scalar_cast<GaussRational>(const GaussRational& z) { return z; }
template <>
inline Complex scalar_cast<Complex>(const GaussRational& z) { return z.to_complex(); }

template <class S>
concept ExactScalar = std::same_as<S, Rational> || std::same_as<S, GaussRational>;

}  // namespace spectra

namespace Eigen {

template <>
struct NumTraits<spectra::Rational> : GenericNumTraits<spectra::Rational> {
  using Real = spectra::Rational;
  using NonInteger = spectra::Rational;
  using Nested = spectra::Rational;
  using Literal = spectra::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<spectra::GaussRational> : GenericNumTraits<spectra::GaussRational> {
  using Real = spectra::Rational;
  using NonInteger = spectra::GaussRational;
  using Nested = spectra::GaussRational;
  using Literal = spectra::GaussRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 320,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace spectra {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<GaussRational>;
using RationalVector = std::vector<Rational>;

}  // namespace spectra
