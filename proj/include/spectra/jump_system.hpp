#pragma once

// Jump-system axiom (J) and the support lemmas for stable polynomials.
// Everything is brute force; supports in this project have at most a few
// hundred points.

#include <optional>
#include <variant>
#include <vector>

#include "spectra/lattice.hpp"

namespace spectra {

/// Unit vector sign * delta_index.
struct Step {
  std::size_t index;
  int sign;

  LatticePoint apply(LatticePoint p) const {
    p[index] += sign;
    return p;
  }
  friend bool operator==(const Step&, const Step&) = default;
};

std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b);

/// |from + s - to| < |from - to|.
bool is_step(const Step& s, const LatticePoint& from, const LatticePoint& to);

/// Steps from `from` toward `to`, ordered by index.
std::vector<Step> steps_toward(const LatticePoint& from, const LatticePoint& to);

struct JumpViolation {
  LatticePoint alpha;
  LatticePoint beta;
  Step step;
};

/// All (alpha, beta, s) with alpha -s-> beta, alpha+s not in J and no
/// follow-up step t toward beta landing in J. Lexicographic in (alpha, beta, s).
std::vector<JumpViolation> check_axiom_J(const LatticePointSet& points);

enum class Extremum { Maximal, Minimal };

/// Points of J that are maximal (or minimal) under the product order.
std::vector<LatticePoint> extremal_points(const LatticePointSet& points, Extremum which = Extremum::Maximal);

struct ConstantSum {
  std::int64_t sum;
};
struct SumWitness {
  LatticePoint first;
  LatticePoint second;
};

/// Common coordinate sum of the extremal elements, or the first pair of
/// extremal elements with different sums.
std::variant<ConstantSum, SumWitness> maximal_constant_sum_check(const LatticePointSet& points,
                                                                  Extremum which = Extremum::Maximal);

struct IntervalViolation {
  LatticePoint alpha;
  LatticePoint beta;
  LatticePoint gamma;
};

/// Every gamma with alpha <= gamma <= beta (alpha, beta in J) that is missing from J.
std::vector<IntervalViolation> interval_property_check(const LatticePointSet& points);

}  // namespace spectra
