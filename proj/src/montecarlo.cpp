#include "wg/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wg {

const char kRngName[] = "mt19937_64+marsaglia-polar";

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t worker) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (worker + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

namespace {

class Normals {
 public:
  explicit Normals(std::uint64_t seed) : gen_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double x, y, s;
    do {
      x = 2.0 * uniform() - 1.0;
      y = 2.0 * uniform() - 1.0;
      s = x * x + y * y;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = y * f;
    have_spare_ = true;
    return x * f;
  }

 private:
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 gen_;
  double spare_ = 0;
  bool have_spare_ = false;
};

using CMat = std::vector<std::complex<double>>;

// Modified Gram-Schmidt on columns; the R diagonal stays positive real.
void orthonormalize(CMat& a, int n) {
  for (int j = 0; j < n; j++) {
    for (int i = 0; i < j; i++) {
      std::complex<double> dot = 0;
      for (int r = 0; r < n; r++) dot += std::conj(a[r * n + i]) * a[r * n + j];
      for (int r = 0; r < n; r++) a[r * n + j] -= dot * a[r * n + i];
    }
    double norm = 0;
    for (int r = 0; r < n; r++) norm += std::norm(a[r * n + j]);
    norm = std::sqrt(norm);
    for (int r = 0; r < n; r++) a[r * n + j] /= norm;
  }
}

void fill_haar(char group, int n, Normals& normals, CMat& out) {
  if (group == 'O') {
    for (auto& v : out) v = normals();
  } else {
    const double inv_sqrt2 = 0.7071067811865475244;
    for (auto& v : out) v = std::complex<double>(normals(), normals()) * inv_sqrt2;
  }
  orthonormalize(out, n);
}

void check_group(char group) {
  if (group != 'O' && group != 'U')
    throw std::invalid_argument("sampling supports groups O and U");
}

}  // namespace

CMat haar_sample(char group, int N, std::uint64_t seed) {
  check_group(group);
  if (N < 1) throw std::invalid_argument("N must be positive");
  Normals normals(seed);
  CMat out(static_cast<size_t>(N) * N);
  fill_haar(group, N, normals, out);
  return out;
}

std::vector<McResult> mc_battery(char group, int N, const std::vector<MonomialSpec>& ms,
                                 long samples, std::uint64_t seed) {
  check_group(group);
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (samples < 1000) throw std::invalid_argument("need at least 10^3 samples");
  for (const auto& m : ms)
    if (m.max_index() > N) throw std::invalid_argument("monomial index exceeds N");

  Normals normals(seed);
  CMat u(static_cast<size_t>(N) * N);
  size_t nm = ms.size();
  std::vector<double> sum(nm, 0.0), sumsq(nm, 0.0), sum_im(nm, 0.0);
  for (long t = 0; t < samples; t++) {
    fill_haar(group, N, normals, u);
    for (size_t q = 0; q < nm; q++) {
      std::complex<double> prod = 1.0;
      for (const auto& f : ms[q].factors) {
        std::complex<double> e = u[static_cast<size_t>(f.row - 1) * N + (f.col - 1)];
        prod *= (f.color == 'x') ? std::conj(e) : e;
      }
      sum[q] += prod.real();
      sumsq[q] += prod.real() * prod.real();
      sum_im[q] += prod.imag();
    }
  }
  std::vector<McResult> out(nm);
  for (size_t q = 0; q < nm; q++) {
    double mean = sum[q] / samples;
    double var = (sumsq[q] - samples * mean * mean) / (samples - 1);
    if (var < 0) var = 0;
    out[q] = {mean, std::sqrt(var / samples), sum_im[q] / samples, samples, seed, kRngName};
  }
  return out;
}

McResult mc_integral(char group, int N, const MonomialSpec& m, long samples, std::uint64_t seed) {
  return mc_battery(group, N, {m}, samples, seed)[0];
}

std::vector<BatteryItem> regression_battery() {
  static const struct {
    char group;
    int N;
    const char* text;
  } items[] = {
      {'O', 2, "u[1,1]^2"},
      {'O', 2, "u[1,1]^2 u[2,2]^2"},
      {'O', 2, "u[1,1] u[1,2] u[2,1] u[2,2]"},
      {'O', 2, "u[1,1]^4"},
      {'O', 3, "u[1,1]^2"},
      {'O', 3, "u[1,1]^4"},
      {'O', 3, "u[1,1]^2 u[1,2]^2"},
      {'O', 3, "u[1,1] u[1,2] u[2,1] u[2,2]"},
      {'O', 4, "u[1,1]^2"},
      {'O', 4, "u[1,1]^2 u[2,2]^2"},
      {'O', 4, "u[1,1]^2 u[1,2]^2"},
      {'O', 4, "u[1,1]^6"},
      {'U', 2, "u[1,1] ub[1,1]"},
      {'U', 2, "u[1,1]^2 ub[1,1]^2"},
      {'U', 2, "u[1,1] u[2,2] ub[1,2] ub[2,1]"},
      {'U', 2, "u[1,1] ub[1,1] u[2,2] ub[2,2]"},
      {'U', 3, "u[1,1] ub[1,1]"},
      {'U', 3, "u[1,1]^2 ub[1,1]^2"},
      {'U', 3, "u[1,1] ub[1,1] u[2,2] ub[2,2]"},
      {'U', 3, "u[1,2] ub[1,2]"},
  };
  std::vector<BatteryItem> out;
  for (const auto& it : items) out.push_back({it.group, it.N, MonomialSpec::parse(it.text)});
  return out;
}

}  // namespace wg
