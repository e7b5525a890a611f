#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "spectra/polynomial.hpp"

namespace spectra {

inline constexpr std::size_t kMaxGroundSet = 16;

/// Subset of a ground set {1..n}; element k (1-based) is bit k-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  /// From 1-based element labels.
  static SubsetMask of(std::initializer_list<int> elements) {
    return of(std::vector<int>(elements));
  }
  static SubsetMask of(const std::vector<int>& elements) {
    std::uint32_t bits = 0;
    for (int e : elements) {
      if (e < 1 || e > static_cast<int>(kMaxGroundSet))
        throw Error(Errc::BoundsViolation, "element " + std::to_string(e) + " outside 1.." +
                                               std::to_string(kMaxGroundSet));
      bits |= 1u << (e - 1);
    }
    return SubsetMask(bits);
  }
  static constexpr SubsetMask full(std::size_t n) { return SubsetMask(n >= 32 ? ~0u : (1u << n) - 1u); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  /// 0-based membership test.
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }
  constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool fits(std::size_t n) const { return is_subset_of(full(n)); }

  /// 1-based element labels in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

  std::string str() const {
    std::string s = "{";
    for (int e : elements()) s += (s.size() > 1 ? "," : "") + std::to_string(e);
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Thrown by matroid_from_bases; carries the offending sets.
class MatroidError : public Error {
 public:
  MatroidError(Errc code, const std::string& what, SubsetMask first = {}, SubsetMask second = {},
               int element = 0)
      : Error(code, what), first_(first), second_(second), element_(element) {}

  SubsetMask first() const { return first_; }
  SubsetMask second() const { return second_; }
  /// 1-based element for ExchangeFailure, 0 otherwise.
  int element() const { return element_; }

 private:
  SubsetMask first_, second_;
  int element_;
};

/// A matroid on {1..n} given by its (validated) set of bases.
class Matroid {
 public:
  std::size_t ground_size() const { return n_; }
  std::size_t rank() const { return rank_; }
  /// Sorted by mask value.
  const std::vector<SubsetMask>& bases() const { return bases_; }
  bool is_basis(SubsetMask s) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  friend Matroid matroid_from_bases(std::size_t, std::vector<SubsetMask>);
  friend Matroid uniform(std::size_t, std::size_t);
  Matroid(std::size_t n, std::vector<SubsetMask> bases);

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<SubsetMask> bases_;
};

/// Validates cardinalities and the basis-exchange axiom by brute force.
Matroid matroid_from_bases(std::size_t n, std::vector<SubsetMask> bases);

/// All r-subsets of [n].
Matroid uniform(std::size_t r, std::size_t n);

/// The Vamos cube V8. Non-bases are the five planes
/// {1,2,3,4}, {1,4,5,6}, {2,3,5,6}, {1,4,7,8}, {2,3,7,8}.
Matroid vamos();

/// max |S ∩ B| over bases B.
std::size_t rank(const Matroid& m, SubsetMask s);

/// Sum over bases of the product of their variables.
Poly bases_polynomial(const Matroid& m);

/// deg of t -> h_M(1 + t * 1_S).
std::size_t rank_via_degree(const Matroid& m, SubsetMask s);
std::size_t rank_via_degree(const Poly& bases_poly, SubsetMask s);

/// 0/1 indicator vector of s with n entries.
std::vector<Rational> indicator(SubsetMask s, std::size_t n);

}  // namespace spectra
