#pragma once

#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <vector>

namespace wg {

struct YoungDiagram {
  std::vector<long> rows;  // weakly decreasing positive row lengths

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<long> r);

  long size() const;
  YoungDiagram doubled() const;  // every row length doubled

  // Standard tableau count by the hook length formula.
  Int syt_count() const;

  // prod over cells (i,j), 1-based, of (N + 2j - i - 1).
  Poly content_poly() const;

  bool operator==(const YoungDiagram&) const = default;
};

std::vector<YoungDiagram> diagrams_of_size(long n);

}  // namespace wg
