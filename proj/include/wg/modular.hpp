#pragma once

#include "wg/rational.hpp"

#include <cstdint>
#include <vector>

namespace wg {

// Montgomery arithmetic mod an odd 62-bit prime.
class Montgomery64 {
public:
  explicit Montgomery64(uint64_t mod);

  uint64_t mod() const { return mod_; }
  uint64_t to(uint64_t x) const;           // x -> xR
  uint64_t from(uint64_t x) const;         // xR -> x
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= mod_ ? s - mod_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + mod_ - b; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;          // a in Montgomery form, a != 0
  uint64_t one() const { return r1_; }

private:
  uint64_t mod_, ninv_, r1_, r2_;
  uint64_t redc(unsigned __int128 t) const;
};

bool is_prime_u64(uint64_t n);

// `count` distinct primes descending from just below 2^62.
std::vector<uint64_t> det_primes(int count);

// Determinant of a residue matrix (ordinary residues, not Montgomery form).
uint64_t det_mod(std::vector<std::vector<uint64_t>> a, const Montgomery64& mg);

// Montgomery forms of 1/d for d = 1..(xs.back()-xs.front()), indexed by d;
// xs must be ascending. Shared across many interpolations on the same nodes.
std::vector<uint64_t> newton_diff_inverses(const std::vector<uint64_t>& xs,
                                           const Montgomery64& mg);

// Newton interpolation through (xs[i], ys[i]) mod p; returns coefficients
// lowest first, ordinary residues. xs must be ascending.
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const Montgomery64& mg);
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const Montgomery64& mg,
                                      const std::vector<uint64_t>& dinv);

// Symmetric-range CRT lift: residues rs[i] mod ps[i] -> the unique integer of
// least absolute value congruent to all of them.
Int crt_symmetric(const std::vector<uint64_t>& rs, const std::vector<uint64_t>& ps);

} // namespace wg
