#pragma once

#include "wg/partition.hpp"
#include "wg/rational.hpp"

#include <vector>

namespace wg {

// d(pi, sigma) = k - |pi v sigma| on pairings of 2k points.
int brauer_distance(const SetPartition& pi, const SetPartition& sigma);

// Signed path counts H_0..H_{d_max}: H_d sums (-1)^r over chains
// pi = t_0 != t_1 != ... != t_r = sigma through pairings of the same points
// with total step distance d.
std::vector<Int> path_series(const SetPartition& pi, const SetPartition& sigma,
                             int d_max);  // 2k <= 8, d_max <= 12

}  // namespace wg
