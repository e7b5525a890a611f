#pragma once

// Integer set functions on 2^[n]: polymatroid axioms, Ingleton inequalities,
// and the rank functions induced by matroids, lattice supports and
// hyperbolic polynomials.

#include <cstdint>
#include <span>
#include <vector>

#include "spectra/lattice.hpp"
#include "spectra/matroid.hpp"

namespace spectra {

/// Values indexed by subset mask. Arbitrary integers are allowed so that
/// non-polymatroids can be inspected too.
class RankTable {
 public:
  explicit RankTable(std::size_t n = 0) : n_(n), values_(std::size_t{1} << n, 0) { check_size(n); }
  RankTable(std::size_t n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {
    check_size(n);
    if (values_.size() != (std::size_t{1} << n))
      throw Error(Errc::ArityMismatch, "rank table for n=" + std::to_string(n) + " needs " +
                                           std::to_string(std::size_t{1} << n) + " values, got " +
                                           std::to_string(values_.size()));
  }

  std::size_t ground_size() const { return n_; }
  std::int64_t operator[](SubsetMask s) const { return values_[s.bits()]; }
  std::int64_t& operator[](SubsetMask s) { return values_[s.bits()]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  static void check_size(std::size_t n) {
    if (n > kMaxGroundSet)
      throw Error(Errc::BoundsViolation, "ground set of size " + std::to_string(n) + " exceeds " +
                                             std::to_string(kMaxGroundSet));
  }

  std::size_t n_;
  std::vector<std::int64_t> values_;
};

RankTable rank_table(const Matroid& m);

enum class PolymatroidAxiom { Normalized, Monotone, Submodular };

const char* axiom_name(PolymatroidAxiom axiom);

/// For Monotone, (s, t) = (S, S+i) with r(S) > r(S+i). For Submodular,
/// lhs = r(S∪T) + r(S∩T) > rhs = r(S) + r(T).
struct PolymatroidViolation {
  PolymatroidAxiom axiom;
  SubsetMask s;
  SubsetMask t;
  std::int64_t lhs;
  std::int64_t rhs;
};

/// Empty iff r is a polymatroid. Monotonicity is tested on covering pairs
/// S ⊂ S+i; submodularity on every incomparable pair S < T for n <= 12 and
/// on the equivalent local form r(S+i) + r(S+j) >= r(S+i+j) + r(S) above that.
std::vector<PolymatroidViolation> check_polymatroid(const RankTable& r);

struct IngletonQuadruple {
  SubsetMask s1, s2, s3, s4;

  /// S1={5,6}, S2={7,8}, S3={1,4}, S4={2,3}: the quadruple on which V8 fails.
  static IngletonQuadruple vamos() {
    return {SubsetMask::of({5, 6}), SubsetMask::of({7, 8}), SubsetMask::of({1, 4}), SubsetMask::of({2, 3})};
  }

  friend bool operator==(const IngletonQuadruple&, const IngletonQuadruple&) = default;
};

/// lhs = r(S1∪S2) + r(S1∪S3∪S4) + r(S3) + r(S4) + r(S2∪S3∪S4)
/// rhs = r(S1∪S3) + r(S1∪S4) + r(S2∪S3) + r(S2∪S4) + r(S3∪S4)
struct IngletonReport {
  IngletonQuadruple quadruple;
  std::int64_t lhs;
  std::int64_t rhs;

  /// Positive deficit certifies that r is not representable over any field.
  std::int64_t deficit() const { return lhs - rhs; }
};

IngletonReport ingleton_check(const RankTable& r, const IngletonQuadruple& q);

enum class ScanMode { VamosQuadruple, DisjointPairs, Full };

inline constexpr std::size_t kFullScanLimit = 5;

/// Violating quadruples (deficit > 0) in lexicographic mask order. Quadruples
/// are enumerated with S1 <= S2 and S3 <= S4, since the inequality is
/// invariant under swapping S1,S2 and swapping S3,S4.
///  - VamosQuadruple: only IngletonQuadruple::vamos() (needs n >= 8).
///  - DisjointPairs: pairwise disjoint nonempty sets of size <= 2.
///  - Full: every quadruple of subsets; n <= full_limit.
std::vector<IngletonReport> ingleton_scan(const RankTable& r, ScanMode mode,
                                          std::size_t full_limit = kFullScanLimit);

RankTable scale(const RankTable& r, std::int64_t factor);

/// max over alpha in J of the sum of alpha_i for i in S.
std::int64_t support_rank(const LatticePointSet& points, SubsetMask s);

/// values[S] = deg of t -> h(e + t * sum_{i in S} directions[i]).
RankTable hyperbolic_rank_table(const Poly& h, std::span<const std::vector<Rational>> directions,
                                std::span<const Rational> e);

}  // namespace spectra
