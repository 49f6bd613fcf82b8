#pragma once

#include "wg/measure.hpp"
#include "wg/partition.hpp"
#include "wg/rational.hpp"

#include <string>
#include <utility>

namespace wg {

// Moment of the main character in the stable range: the diagram count |D(k)|.
long char_moment_limit(const CategoryDescriptor& d, int k);
long char_moment_limit(const CategoryDescriptor& d, const ColorWord& w);

// k-th moment of the truncated character u[1,1] + ... + u[s,s] at size N,
// as Tr(W_{kN} G_{ks}) over D(k); the singular-Gram fallback restricts the
// trace to the retained subfamily.
Rat truncated_moment_exact(const CategoryDescriptor& d, int k, int N, int s);
Rat truncated_moment_exact(const CategoryDescriptor& d, const ColorWord& w, int N, int s);

// Limit of the above along s = t*N: sum over D(k) of t^{|pi|}.
Rat truncated_moment_limit(const CategoryDescriptor& d, int k, const Rat& t);
Rat truncated_moment_limit(const CategoryDescriptor& d, const ColorWord& w, const Rat& t);

// Law of the rank-s truncated character over S_N:
// (s!/N!) sum_p ((N-p)!/(s-p)!) (delta_1 - delta_0)^{*p} / p!.
SignedMeasure sn_truncated_law(int N, int s);

enum class LawFamily { Gaussian, ComplexGaussian, Poisson, Bessel, Semicircle, MarchenkoPastur };

// Semicircle and Marchenko-Pastur carry no parameter; t and s are ignored
// for them. Bessel level 1 coincides with Poisson, level 2 with the
// hyperoctahedral (symmetric Skellam-type) law.
struct LawDescriptor {
  LawFamily family = LawFamily::Poisson;
  Rat t = 1;
  long s = 2;  // Bessel level

  static LawDescriptor parse(const std::string& name, const Rat& t, long s = 2);
  std::string str() const;
};

// Partition-sum moments: g_t over pairings, G_t over matching pairings,
// p_t over all partitions, b_t^s over blockwise color-balanced partitions,
// gamma_1 and pi_1 via Catalan numbers. For color-sensitive families the
// plain-k form uses the alternating word "oxox...".
Rat law_moment(const LawDescriptor& law, int k);
Rat law_moment(const LawDescriptor& law, const ColorWord& w);

// Series evaluation of the density with proven rational error control.
struct DensityMoment {
  Rat value;
  long window;     // atoms with |position| <= window were summed
  Rat error_bound; // |value - true moment| <= error_bound, proven
};

// Supported: Poisson and Bessel at level 1 or 2.
DensityMoment density_moment(const LawDescriptor& law, int k, const Rat& tol);

// Atoms on [-window, window] with rational weight approximations; error_bound
// dominates both the discarded tail mass and the weight rounding, so the
// measure is within error_bound of the law in total variation.
struct TruncatedDensity {
  SignedMeasure measure;
  long window;
  Rat error_bound;
};

TruncatedDensity truncated_density(const LawDescriptor& law, long window, const Rat& tol);

// Convolution semigroup check: truncated law at s convolved with the one at
// t against the one at s + t, in total variation.
struct SemigroupReport {
  long window;
  Rat tv;     // distance between the two computed truncations
  Rat slack;  // proven bound on all truncation and rounding error
  bool pass = false;  // tv + slack <= tol
};

// family must be Poisson or Bessel (level 2).
SemigroupReport semigroup_check(LawFamily family, const Rat& s, const Rat& t, long window,
                                const Rat& tol);

// (integral over SU2 of chi^{2k}, integral over SO3 of (chi+1)^k), both
// evaluated through sphere moments; each equals the k-th Catalan number.
std::pair<Rat, Rat> su2_so3_moments(int k);

}  // namespace wg
