#pragma once

#include "wg/rational.hpp"

#include <utility>
#include <vector>

namespace wg {

// Atomic measure with exact positions and weights. Atoms are kept sorted by
// position, duplicates merged, zero weights dropped.
class SignedMeasure {
 public:
  SignedMeasure() = default;
  explicit SignedMeasure(std::vector<std::pair<Rat, Rat>> atoms);

  const std::vector<std::pair<Rat, Rat>>& atoms() const { return atoms_; }
  Rat total_mass() const;
  bool is_probability() const;  // nonnegative weights summing to 1
  Rat mass_at(const Rat& x) const;
  Rat moment(long k) const;

  bool operator==(const SignedMeasure&) const = default;

 private:
  std::vector<std::pair<Rat, Rat>> atoms_;
};

SignedMeasure convolve(const SignedMeasure& a, const SignedMeasure& b);

// Total-variation norm of a - b: sum of absolute weight differences.
Rat variation_distance(const SignedMeasure& a, const SignedMeasure& b);

}  // namespace wg
