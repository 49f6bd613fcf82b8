#include "wg/young.hpp"

#include <stdexcept>

namespace wg {

YoungDiagram::YoungDiagram(std::vector<long> r) : rows(std::move(r)) {
  for (size_t i = 0; i < rows.size(); i++) {
    if (rows[i] < 1) throw std::invalid_argument("row lengths must be positive");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("row lengths must be weakly decreasing");
  }
}

long YoungDiagram::size() const {
  long n = 0;
  for (long r : rows) n += r;
  return n;
}

YoungDiagram YoungDiagram::doubled() const {
  YoungDiagram d = *this;
  for (long& r : d.rows) r *= 2;
  return d;
}

Int YoungDiagram::syt_count() const {
  Int hooks = 1;
  long nrows = static_cast<long>(rows.size());
  for (long i = 0; i < nrows; i++)
    for (long j = 0; j < rows[i]; j++) {
      long arm = rows[i] - 1 - j;
      long leg = 0;
      for (long i2 = i + 1; i2 < nrows; i2++)
        if (rows[i2] > j) leg++;
      hooks *= arm + leg + 1;
    }
  return factorial(size()) / hooks;
}

Poly YoungDiagram::content_poly() const {
  Poly out(1);
  for (size_t i = 0; i < rows.size(); i++)
    for (long j = 1; j <= rows[i]; j++)
      out = out * (Poly::var() + Poly(2 * j - static_cast<long>(i + 1) - 1));
  return out;
}

namespace {

void diagrams_rec(long remaining, long max_part, std::vector<long>& cur,
                  std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.push_back(YoungDiagram(cur));
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; part--) {
    cur.push_back(part);
    diagrams_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> diagrams_of_size(long n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  std::vector<YoungDiagram> out;
  std::vector<long> cur;
  diagrams_rec(n, n, cur, out);
  return out;
}

}  // namespace wg
