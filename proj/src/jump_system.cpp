#include "spectra/jump_system.hpp"

#include <cstdlib>
#include <numeric>

namespace spectra {
namespace {

void check_dims(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size())
    throw Error(Errc::ArityMismatch, "lattice points of length " + std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()));
}

bool leq(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Lexicographic successor of g inside the box [lo, hi]; false after the last point.
bool advance_in_box(LatticePoint& g, const LatticePoint& lo, const LatticePoint& hi) {
  for (std::size_t k = g.size(); k-- > 0;) {
    if (g[k] < hi[k]) {
      ++g[k];
      return true;
    }
    g[k] = lo[k];
  }
  return false;
}

std::int64_t coordinate_sum(const LatticePoint& p) { return std::accumulate(p.begin(), p.end(), std::int64_t{0}); }

}  // namespace

std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b) {
  check_dims(a, b);
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::llabs(a[i] - b[i]);
  return d;
}

bool is_step(const Step& s, const LatticePoint& from, const LatticePoint& to) {
  check_dims(from, to);
  if (s.index >= from.size() || (s.sign != 1 && s.sign != -1))
    throw Error(Errc::ArityMismatch, "step is not a unit vector of the ambient dimension");
  return l1_distance(s.apply(from), to) < l1_distance(from, to);
}

std::vector<Step> steps_toward(const LatticePoint& from, const LatticePoint& to) {
  check_dims(from, to);
  std::vector<Step> out;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (to[i] > from[i]) out.push_back({i, +1});
    else if (to[i] < from[i]) out.push_back({i, -1});
  }
  return out;
}

std::vector<JumpViolation> check_axiom_J(const LatticePointSet& points) {
  std::vector<JumpViolation> out;
  for (const auto& alpha : points) {
    for (const auto& beta : points) {
      if (alpha == beta) continue;
      for (const Step& s : steps_toward(alpha, beta)) {
        const LatticePoint mid = s.apply(alpha);
        if (points.contains(mid)) continue;
        bool repaired = false;
        for (const Step& t : steps_toward(mid, beta)) {
          if (points.contains(t.apply(mid))) {
            repaired = true;
            break;
          }
        }
        if (!repaired) out.push_back({alpha, beta, s});
      }
    }
  }
  return out;
}

std::vector<LatticePoint> extremal_points(const LatticePointSet& points, Extremum which) {
  std::vector<LatticePoint> out;
  for (const auto& a : points) {
    bool dominated = false;
    for (const auto& b : points) {
      if (a == b) continue;
      if (which == Extremum::Maximal ? leq(a, b) : leq(b, a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::variant<ConstantSum, SumWitness> maximal_constant_sum_check(const LatticePointSet& points, Extremum which) {
  if (points.empty()) throw Error(Errc::EmptySet, "constant-sum check of an empty lattice set");
  const auto extremal = extremal_points(points, which);
  const std::int64_t sum = coordinate_sum(extremal.front());
  for (const auto& p : extremal)
    if (coordinate_sum(p) != sum) return SumWitness{extremal.front(), p};
  return ConstantSum{sum};
}

std::vector<IntervalViolation> interval_property_check(const LatticePointSet& points) {
  std::vector<IntervalViolation> out;
  for (const auto& alpha : points) {
    for (const auto& beta : points) {
      if (alpha == beta || !leq(alpha, beta)) continue;
      LatticePoint gamma = alpha;
      do {
        if (!points.contains(gamma)) out.push_back({alpha, beta, gamma});
      } while (advance_in_box(gamma, alpha, beta));
    }
  }
  return out;
}

}  // namespace spectra
