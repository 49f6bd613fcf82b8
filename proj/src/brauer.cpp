#include "wg/brauer.hpp"

#include <stdexcept>

namespace wg {

int brauer_distance(const SetPartition& pi, const SetPartition& sigma) {
  if (!pi.is_pairing() || !sigma.is_pairing())
    throw std::invalid_argument("distance is defined on pairings");
  if (pi.points() != sigma.points())
    throw std::invalid_argument("pairings must share the point set");
  return pi.points() / 2 - pi.join(sigma).block_count();
}

std::vector<Int> path_series(const SetPartition& pi, const SetPartition& sigma, int d_max) {
  int points = pi.points();
  if (points > 8) throw std::invalid_argument("path series supports at most 8 points");
  if (d_max < 0 || d_max > 12) throw std::invalid_argument("length bound must lie in [0, 12]");
  std::vector<SetPartition> all = enumerate_pairings(points);
  int n = static_cast<int>(all.size());
  int from = -1, to = -1;
  for (int i = 0; i < n; i++) {
    if (all[i] == pi) from = i;
    if (all[i] == sigma) to = i;
  }
  if (from < 0 || to < 0) throw std::invalid_argument("inputs must be pairings");

  std::vector<std::vector<int>> cost(n, std::vector<int>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) cost[i][j] = brauer_distance(all[i], all[j]);

  // v[d][q] = signed count of paths from pi to q of total length d; one step
  // appended multiplies the sign by -1, and every step costs >= 1.
  std::vector<std::vector<Int>> v(d_max + 1, std::vector<Int>(n, Int(0)));
  v[0][from] = 1;
  for (int d = 1; d <= d_max; d++)
    for (int q = 0; q < n; q++) {
      Int s = 0;
      for (int r = 0; r < n; r++) {
        int c = cost[r][q];
        if (r == q || c > d) continue;
        s += v[d - c][r];
      }
      v[d][q] = -s;
    }

  std::vector<Int> h(d_max + 1);
  for (int d = 0; d <= d_max; d++) h[d] = v[d][to];
  return h;
}

}  // namespace wg
