#include "wg/integrate.hpp"

#include "wg/gram.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wg {

namespace {

void skip_ws(const std::string& t, size_t& pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) pos++;
}

long parse_int(const std::string& t, size_t& pos, const char* what) {
  skip_ws(t, pos);
  size_t start = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) pos++;
  if (pos == start) throw std::invalid_argument(std::string("monomial: expected ") + what);
  return std::stol(t.substr(start, pos - start));
}

void expect(const std::string& t, size_t& pos, char ch) {
  skip_ws(t, pos);
  if (pos >= t.size() || t[pos] != ch)
    throw std::invalid_argument(std::string("monomial: expected '") + ch + "'");
  pos++;
}

// Families whose diagram sets depend on the color word; Ps reads colors even
// though it also accepts uncolored input.
bool color_sensitive(const CategoryDescriptor& d) {
  return d.needs_colors() || d.tag == CategoryTag::Ps;
}

// Color words whose diagram family is empty, so the integral vanishes before
// any Gram matrix is built.
bool word_forces_zero(const CategoryDescriptor& d, const ColorWord& w) {
  long white = std::count(w.begin(), w.end(), 'o');
  long black = static_cast<long>(w.size()) - white;
  switch (d.tag) {
    case CategoryTag::MatchP2:
    case CategoryTag::MatchPeven:
      return white != black;
    case CategoryTag::Ps:
      return (white - black) % d.s != 0;
    default:
      return false;
  }
}

}  // namespace

ColorWord MonomialSpec::word() const {
  ColorWord w;
  for (const auto& f : factors) w += f.color;
  return w;
}

std::vector<int> MonomialSpec::rows() const {
  std::vector<int> r;
  for (const auto& f : factors) r.push_back(f.row);
  return r;
}

std::vector<int> MonomialSpec::cols() const {
  std::vector<int> c;
  for (const auto& f : factors) c.push_back(f.col);
  return c;
}

int MonomialSpec::max_index() const {
  int m = 0;
  for (const auto& f : factors) m = std::max({m, f.row, f.col});
  return m;
}

MonomialSpec MonomialSpec::parse(const std::string& text) {
  MonomialSpec m;
  size_t pos = 0;
  skip_ws(text, pos);
  while (pos < text.size()) {
    if (text[pos] != 'u') throw std::invalid_argument("monomial: factors start with 'u' or 'ub'");
    pos++;
    char color = 'o';
    if (pos < text.size() && text[pos] == 'b') {
      color = 'x';
      pos++;
    }
    expect(text, pos, '[');
    long i = parse_int(text, pos, "row index");
    expect(text, pos, ',');
    long j = parse_int(text, pos, "column index");
    expect(text, pos, ']');
    if (i < 1 || j < 1) throw std::invalid_argument("monomial: indices are 1-based");
    long e = 1;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      pos++;
      e = parse_int(text, pos, "exponent");
    }
    for (long r = 0; r < e; r++)
      m.factors.push_back({static_cast<int>(i), static_cast<int>(j), color});
    skip_ws(text, pos);
  }
  return m;
}

std::string MonomialSpec::str() const {
  std::string out;
  size_t t = 0;
  while (t < factors.size()) {
    size_t run = t;
    while (run < factors.size() && factors[run] == factors[t]) run++;
    if (!out.empty()) out += ' ';
    out += (factors[t].color == 'x') ? "ub[" : "u[";
    out += std::to_string(factors[t].row) + "," + std::to_string(factors[t].col) + "]";
    if (run - t > 1) out += "^" + std::to_string(run - t);
    t = run;
  }
  return out;
}

long RectSpec::total() const {
  long s = 0;
  for (const auto& row : a)
    for (long v : row) s += v;
  return s;
}

void RectSpec::validate() const {
  if (a.empty() || a[0].empty()) throw std::invalid_argument("exponent pattern must be nonempty");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != q())
      throw std::invalid_argument("exponent pattern must be rectangular");
    for (long v : row)
      if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
  }
}

bool admissible(const RectSpec& spec) {
  spec.validate();
  for (const auto& row : spec.a) {
    long s = 0;
    for (long v : row) s += v;
    if (s % 2 != 0) return false;
  }
  for (int j = 0; j < spec.q(); j++) {
    long s = 0;
    for (const auto& row : spec.a) s += row[j];
    if (s % 2 != 0) return false;
  }
  return true;
}

Rat easy_integral(const CategoryDescriptor& d, const MonomialSpec& m, int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (m.k() == 0) return 1;
  if (m.max_index() > N) throw std::invalid_argument("indices must lie in [1, N]");
  ColorWord w = m.word();
  if (!color_sensitive(d) && w.find('x') != ColorWord::npos)
    throw std::invalid_argument(d.name() +
                                " ignores colors; conjugate entries need a colored family");
  if (word_forces_zero(d, w)) return 0;
  const NumericWeingarten& wg =
      color_sensitive(d) ? weingarten_cached(d, w, N) : weingarten_cached(d, m.k(), N);
  std::vector<int> rows = m.rows();
  std::vector<int> cols = m.cols();
  int n = static_cast<int>(wg.basis.size());
  std::vector<char> dr(n), dc(n);
  for (int a = 0; a < n; a++) {
    const SetPartition& pi = wg.index[wg.basis[a]];
    dr[a] = delta(pi, rows);
    dc[a] = delta(pi, cols);
  }
  Rat total = 0;
  for (int a = 0; a < n; a++) {
    if (!dr[a]) continue;
    for (int b = 0; b < n; b++)
      if (dc[b]) total += wg.entries(a, b);
  }
  return total;
}

Rat sn_exact_integral(const std::vector<int>& i, const std::vector<int>& j, int N) {
  if (i.size() != j.size()) throw std::invalid_argument("index tuples must have equal length");
  if (N < 1) throw std::invalid_argument("N must be positive");
  for (size_t t = 0; t < i.size(); t++)
    if (i[t] < 1 || i[t] > N || j[t] < 1 || j[t] > N)
      throw std::invalid_argument("indices must lie in [1, N]");
  SetPartition ki = kernel(i);
  if (ki != kernel(j)) return 0;
  return Rat(factorial(N - ki.block_count()), factorial(N));
}

Rat rect_integral(const RectSpec& spec, int N) {
  spec.validate();
  if (N < std::max(spec.p(), spec.q()))
    throw std::invalid_argument("N must be at least max(p, q)");
  if (spec.total() % 2 != 0) return 0;
  MonomialSpec m;
  for (int i = 0; i < spec.p(); i++)
    for (int j = 0; j < spec.q(); j++)
      for (long c = 0; c < spec.a[i][j]; c++) m.factors.push_back({i + 1, j + 1, 'o'});
  CategoryDescriptor pairings;
  pairings.tag = CategoryTag::P2;
  return easy_integral(pairings, m, N);
}

Rat sphere_moment(const std::vector<long>& exponents, int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (static_cast<int>(exponents.size()) > N)
    throw std::invalid_argument("more exponents than coordinates");
  long sum = 0;
  for (long e : exponents) {
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (e % 2 != 0) return 0;
    sum += e;
  }
  Int num = shifted_dfact(N - 1);
  for (long e : exponents) num *= shifted_dfact(e);
  return Rat(num, shifted_dfact(N + sum - 1));
}

Rat row_slice_integral(const std::vector<long>& a, int N) { return sphere_moment(a, N); }

Rat o2_closed_form(long a, long b, long c, long d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("exponents must be nonnegative");
  bool all_even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0 && d % 2 == 0;
  bool all_odd = a % 2 == 1 && b % 2 == 1 && c % 2 == 1 && d % 2 == 1;
  if (!all_even && !all_odd) return 0;
  Rat v(shifted_dfact(a + d) * shifted_dfact(b + c), shifted_dfact(a + b + c + d + 1));
  return all_odd ? -v : v;
}

std::pair<long, Rat> leading_order_I(const RectSpec& spec) {
  spec.validate();
  long k2 = spec.total();
  for (const auto& row : spec.a)
    for (long v : row)
      if (v % 2 != 0) return {k2 / 2 + 1, Rat(0)};
  Int coeff = 1;
  for (const auto& row : spec.a)
    for (long v : row) coeff *= shifted_dfact(v);
  return {k2 / 2, Rat(coeff)};
}

}  // namespace wg
