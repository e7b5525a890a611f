#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spectra/polynomial.hpp"

namespace spectra {

using LatticePoint = std::vector<std::int64_t>;

/// Finite set of integer vectors of a common length, kept in lexicographic order.
class LatticePointSet {
 public:
  explicit LatticePointSet(std::size_t dim = 0) : dim_(dim) {}
  LatticePointSet(std::size_t dim, const std::vector<LatticePoint>& points) : dim_(dim) {
    for (const auto& p : points) insert(p);
  }

  void insert(const LatticePoint& p) {
    if (p.size() != dim_)
      throw Error(Errc::ArityMismatch, "lattice point of length " + std::to_string(p.size()) +
                                           " in a set of dimension " + std::to_string(dim_));
    points_.insert(p);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const { return points_.count(p) > 0; }
  const std::set<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

 private:
  std::size_t dim_;
  std::set<LatticePoint> points_;
};

/// Exponent vectors of the nonzero terms of p.
template <class S>
LatticePointSet support(const Polynomial<S>& p) {
  LatticePointSet out(p.num_vars());
  for (const auto& [mono, c] : p.terms())
    out.insert(LatticePoint(mono.exponents().begin(), mono.exponents().end()));
  return out;
}

}  // namespace spectra
