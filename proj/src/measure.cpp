#include "wg/measure.hpp"

#include <algorithm>
#include <map>

namespace wg {

SignedMeasure::SignedMeasure(std::vector<std::pair<Rat, Rat>> atoms) {
  std::map<Rat, Rat> merged;
  for (auto& [x, w] : atoms) merged[x] += w;
  for (auto& [x, w] : merged)
    if (w != 0) atoms_.emplace_back(x, w);
}

Rat SignedMeasure::total_mass() const {
  Rat t = 0;
  for (const auto& [x, w] : atoms_) t += w;
  return t;
}

bool SignedMeasure::is_probability() const {
  for (const auto& [x, w] : atoms_)
    if (w < 0) return false;
  return total_mass() == 1;
}

Rat SignedMeasure::mass_at(const Rat& x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const auto& a, const Rat& v) { return a.first < v; });
  if (it != atoms_.end() && it->first == x) return it->second;
  return 0;
}

Rat SignedMeasure::moment(long k) const {
  Rat m = 0;
  for (const auto& [x, w] : atoms_) {
    Rat p = 1;
    for (long i = 0; i < k; i++) p *= x;
    m += w * p;
  }
  return m;
}

SignedMeasure convolve(const SignedMeasure& a, const SignedMeasure& b) {
  std::vector<std::pair<Rat, Rat>> atoms;
  for (const auto& [x, u] : a.atoms())
    for (const auto& [y, v] : b.atoms()) atoms.emplace_back(x + y, u * v);
  return SignedMeasure(std::move(atoms));
}

Rat variation_distance(const SignedMeasure& a, const SignedMeasure& b) {
  Rat d = 0;
  auto ia = a.atoms().begin(), ib = b.atoms().begin();
  while (ia != a.atoms().end() || ib != b.atoms().end()) {
    if (ib == b.atoms().end() || (ia != a.atoms().end() && ia->first < ib->first)) {
      d += abs(ia->second);
      ++ia;
    } else if (ia == a.atoms().end() || ib->first < ia->first) {
      d += abs(ib->second);
      ++ib;
    } else {
      d += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return d;
}

}  // namespace wg
