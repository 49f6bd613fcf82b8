#pragma once

#include "wg/matrix.hpp"
#include "wg/partition.hpp"
#include "wg/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wg {

// Entry (pi, sigma) is N^{|pi v sigma|}; joins are taken on the underlying
// uncolored partitions, colors only select the index family.
struct SymbolicGram {
  std::vector<SetPartition> index;
  Mat<Poly> entries;
};

struct NumericGram {
  std::vector<SetPartition> index;
  Mat<Rat> entries;
};

SymbolicGram gram_symbolic(const CategoryDescriptor& d, int k);
SymbolicGram gram_symbolic(const CategoryDescriptor& d, const ColorWord& w);
NumericGram gram_numeric(const CategoryDescriptor& d, int k, long N);
NumericGram gram_numeric(const CategoryDescriptor& d, const ColorWord& w, long N);

// Inverse Gram held as adjugate / det so large families avoid per-entry
// rational-function reduction.
struct SymbolicWeingarten {
  std::vector<SetPartition> index;
  Mat<Poly> adjugate;
  Poly det;

  RatFunc entry(int i, int j) const { return RatFunc(adjugate(i, j), det); }
  Mat<RatFunc> entries() const;
};

struct NumericWeingarten {
  std::vector<SetPartition> index;
  // Positions into index of the greedily selected maximal independent
  // subfamily; all positions when the Gram matrix is nonsingular.
  std::vector<int> basis;
  Mat<Rat> entries;  // inverse of the Gram restricted to basis x basis

  bool reduced() const { return basis.size() != index.size(); }
};

SymbolicWeingarten weingarten_symbolic(const CategoryDescriptor& d, int k);
SymbolicWeingarten weingarten_symbolic(const CategoryDescriptor& d, const ColorWord& w);
NumericWeingarten weingarten_numeric(const CategoryDescriptor& d, int k, long N);
NumericWeingarten weingarten_numeric(const CategoryDescriptor& d, const ColorWord& w, long N);

// Process-wide publish-once store keyed by (family, word or point count, N);
// entries are immutable after insertion, concurrent readers share them, and
// the first computed value wins.
const NumericWeingarten& weingarten_cached(const CategoryDescriptor& d, int k, long N);
const NumericWeingarten& weingarten_cached(const CategoryDescriptor& d, const ColorWord& w,
                                           long N);

// A(pi,sigma) = [pi <= sigma]; L(pi,sigma) = [sigma <= pi] * N(N-1)...(N-|pi|+1).
// A * L equals the full Gram matrix on P(k).
std::pair<Mat<Poly>, Mat<Poly>> gram_AL_factorization(int k);  // k <= 6

// prod over pi in P(k) of N(N-1)...(N-|pi|+1).
Poly lindstrom_det(int k);  // k <= 5

// W(pi,sigma) = sum over tau <= pi ^ sigma of
// mu(tau,pi) mu(tau,sigma) / (N(N-1)...(N-|tau|+1)).
Mat<RatFunc> sn_weingarten_mobius(int k);  // k <= 5
Mat<Rat> sn_weingarten_mobius_numeric(int k, long N);

// P0 = 1, P1 = N, P_{r+1} = N*P_r - P_{r-1}.
Poly chebyshev(long r);

// Determinant of the Gram matrix on noncrossing pairings of 2*half_k points
// as a product of Chebyshev-type factors; the exponent convention is pinned
// by the worked 4- and 6-point values and rechecked on every call.
Poly difrancesco_det(int half_k);  // half_k <= 4

// Product form with a formal sqrt(N) prefactor, for the Gram determinant on
// NC(k); expand() folds the parity split back into a polynomial in N.
struct SqrtProduct {
  long half_exponent = 0;                      // power of sqrt(N)
  std::vector<std::pair<Poly, long>> factors;  // (polynomial in N, exponent)

  Poly expand() const;
  std::string str() const;
};

SqrtProduct difrancesco_det_nc(int k);  // k <= 4

// prod over |lambda| = points/2 of f_N(lambda)^{f^{2 lambda}} with
// f_N(lambda) = prod over cells (N + 2j - i - 1).
Poly zonal_det_pairings(int points);  // even, <= 8

struct AsymptoticReport {
  std::vector<long> Ns;
  std::vector<Rat> max_diag_gap;  // max over pi of |N^{|pi|} W(pi,pi) - 1|
  std::vector<Rat> max_offdiag;   // max over pi != sigma of |N^{|pi v sigma|} W(pi,sigma)|
  Rat fitted_C;                   // from the first ladder point
  bool pass = false;              // both maxima <= C/N all along, and decreasing
  std::vector<SetPartition> index;
  Mat<Rat> leading;  // N^{k + d(pi,sigma)} W at the largest N (pairing families)
};

AsymptoticReport asymptotic_checks(const CategoryDescriptor& d, int k,
                                   const std::vector<long>& Ns);

}  // namespace wg
