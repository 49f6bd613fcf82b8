#pragma once

#include "wg/rational.hpp"

#include <string>
#include <vector>

namespace wg {

// Color word over k points, 'o' = white, 'x' = black.
using ColorWord = std::string;

// Set partition of {1..k} stored as a restricted growth string: rgs[p] is the
// block id of point p+1, blocks numbered by first appearance. This makes the
// canonical form unique and comparisons cheap.
class SetPartition {
public:
  SetPartition() = default;
  explicit SetPartition(std::vector<int> rgs);
  static SetPartition from_blocks(int k, const std::vector<std::vector<int>>& blocks);
  static SetPartition singletons(int k);
  static SetPartition full(int k);

  int points() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return nblocks_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int block_of(int point) const;                 // 1-based point
  std::vector<std::vector<int>> blocks() const;  // ascending inside, ordered by minimum
  std::vector<int> block_sizes() const;

  bool operator==(const SetPartition&) const = default;
  bool operator<(const SetPartition& o) const { return rgs_ < o.rgs_; }

  std::string str() const;  // "{1,2|3}"
  static SetPartition parse(const std::string& s);

  bool refines(const SetPartition& o) const;  // *this <= o
  SetPartition join(const SetPartition& o) const;
  SetPartition meet(const SetPartition& o) const;
  bool is_pairing() const;
  bool is_noncrossing() const;

private:
  std::vector<int> rgs_;
  int nblocks_ = 0;
};

// Canonical enumeration order: block count descending (all-singletons first),
// ties broken by restricted-growth-string lexicographic order.
bool canonical_less(const SetPartition& a, const SetPartition& b);

// Partition of positions grouping equal values.
SetPartition kernel(const std::vector<int>& values);

// 1 iff the tuple is constant on every block, i.e. pi <= kernel(idx).
bool delta(const SetPartition& pi, const std::vector<int>& idx);

// Moebius function of the partition lattice; 0 unless a <= b.
Int mobius(const SetPartition& a, const SetPartition& b);

// Leg-doubling bijection NC(k) -> NC2(2k) and its inverse.
SetPartition fatten(const SetPartition& pi);
SetPartition shrink(const SetPartition& pairing);

enum class CategoryTag { P, P2, P12, Peven, Ps, NC, NC2, MatchP2, MatchP12, MatchPeven };

struct CategoryDescriptor {
  CategoryTag tag = CategoryTag::P;
  int s = 0;  // level for Ps

  static CategoryDescriptor parse(const std::string& name);
  std::string name() const;
  bool needs_colors() const;
  bool operator==(const CategoryDescriptor&) const = default;
};

// Membership predicate; w required for color-sensitive tags, and must match
// the partition's point count. Uncolored input to Ps counts all points white.
bool is_member(const CategoryDescriptor& d, const SetPartition& pi,
               const ColorWord* w = nullptr);

std::vector<SetPartition> enumerate_partitions(int k);
std::vector<SetPartition> enumerate_pairings(int k);
std::vector<SetPartition> noncrossing_pairings(int k);
std::vector<SetPartition> enumerate_category(const CategoryDescriptor& d, int k,
                                             const ColorWord* w = nullptr);

} // namespace wg
