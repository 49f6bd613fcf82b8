#pragma once

#include "wg/integrate.hpp"
#include "wg/measure.hpp"
#include "wg/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wg {

// S: permutation matrices; H: signed permutations; Hs: permutations with
// s-th root-of-unity phases (s = 1 and s = 2 recover S and H).
enum class GroupFamily { S, H, Hs };

GroupFamily parse_family(const std::string& name);
std::string family_name(GroupFamily fam);

struct GroupElement {
  std::vector<int> perm;    // perm[j-1] = image of j, values in 1..N
  std::vector<int> phases;  // phase exponent attached to column j, reduced mod s
};

// Value sum c_e * w^e over e = 0..s-1 with w = exp(2*pi*i/s).
class CyclotomicSum {
 public:
  CyclotomicSum() : s_(1), coeff_(1, Rat(0)) {}
  CyclotomicSum(long s, std::vector<Rat> coeff);

  long level() const { return s_; }
  const std::vector<Rat>& coefficients() const { return coeff_; }

  // Equal coefficients on all nonzero exponents collapse to c0 - c1 because
  // the nonzero powers of w sum to -1.
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()
  std::string str() const;

 private:
  long s_;
  std::vector<Rat> coeff_;
};

// Element cap for exhaustive enumeration; WG_ENUM_BUDGET overrides the
// default of 10^7.
long enum_budget();

Int group_order(GroupFamily fam, int N, long s = 1);

// Visits every element exactly once, permutations in lexicographic order and
// phase vectors in counter order, without materializing the group.
void enumerate_group(GroupFamily fam, int N, long s,
                     const std::function<void(const GroupElement&)>& visit);

// (1/|G|) sum over the group of the monomial in the entries
// u[i,j] = w^{p_j} [perm(j) = i]; conjugate factors negate the phase.
CyclotomicSum exact_average(GroupFamily fam, int N, long s, const MonomialSpec& m);

// Exact distribution of the truncated character sum_{j <= s_rank} u[j,j];
// integer-valued for S and H.
SignedMeasure fixed_point_law(GroupFamily fam, int N, int s_rank);

}  // namespace wg
