#pragma once

#include "wg/partition.hpp"
#include "wg/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wg {

struct MonomialFactor {
  int row = 1;
  int col = 1;
  char color = 'o';  // 'o' plain entry, 'x' conjugate entry

  bool operator==(const MonomialFactor&) const = default;
};

// Ordered product of matrix entries u[i,j] / ub[i,j].
struct MonomialSpec {
  std::vector<MonomialFactor> factors;

  int k() const { return static_cast<int>(factors.size()); }
  ColorWord word() const;
  std::vector<int> rows() const;
  std::vector<int> cols() const;
  int max_index() const;

  // Grammar: whitespace-separated factors "u[i,j]", "ub[i,j]", optional "^e".
  static MonomialSpec parse(const std::string& text);
  std::string str() const;

  bool operator==(const MonomialSpec&) const = default;
};

// Rectangular exponent pattern: a[i][j] copies of the (i,j) entry.
struct RectSpec {
  std::vector<std::vector<long>> a;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }
  long total() const;
  void validate() const;  // rectangular, nonnegative, p,q >= 1
};

Rat easy_integral(const CategoryDescriptor& d, const MonomialSpec& m, int N);
Rat sn_exact_integral(const std::vector<int>& i, const std::vector<int>& j, int N);
Rat rect_integral(const RectSpec& a, int N);
bool admissible(const RectSpec& a);
Rat sphere_moment(const std::vector<long>& exponents, int N);
Rat row_slice_integral(const std::vector<long>& a, int N);
Rat o2_closed_form(long a, long b, long c, long d);

// (order, coefficient): leading term coefficient of N^-order when all
// exponents are even; otherwise (k + 1, 0) marking the faster-decay branch.
std::pair<long, Rat> leading_order_I(const RectSpec& a);

}  // namespace wg
