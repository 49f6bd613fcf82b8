#pragma once

#include "wg/integrate.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace wg {

// RNG identifier printed in every report: mt19937_64 driving 53-bit uniforms
// and the Marsaglia polar transform for normals.
extern const char kRngName[];

// Default seed used by the CLI when --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20240915;

// Derives independent per-worker seeds from a base seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t worker);

// One Haar-distributed matrix, row-major N*N. group 'O': real orthogonal
// (imaginary parts all zero); 'U': complex unitary. A standard Gaussian
// matrix is orthonormalized columnwise; the normalization factors are
// positive real, which makes the law exactly Haar.
std::vector<std::complex<double>> haar_sample(char group, int N, std::uint64_t seed);

struct McResult {
  double estimate = 0;    // sample mean of the real part
  double std_error = 0;   // standard error of that mean
  double imag_mean = 0;   // mean imaginary part (diagnostic; ~0 for real laws)
  long samples = 0;
  std::uint64_t seed = 0;
  std::string rng;
};

McResult mc_integral(char group, int N, const MonomialSpec& m, long samples, std::uint64_t seed);

// Evaluates all monomials on one shared sample stream.
std::vector<McResult> mc_battery(char group, int N, const std::vector<MonomialSpec>& ms,
                                 long samples, std::uint64_t seed);

struct BatteryItem {
  char group = 'O';
  int N = 2;
  MonomialSpec m;
};

// Fixed 20-monomial regression battery over O2, O3, O4, U2, U3; four
// monomials per group, frozen so reruns are comparable.
std::vector<BatteryItem> regression_battery();

}  // namespace wg
