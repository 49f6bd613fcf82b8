#include "wg/gram.hpp"

#include "wg/brauer.hpp"
#include "wg/young.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wg {

namespace {

std::vector<SetPartition> category_index(const CategoryDescriptor& d, int k,
                                         const ColorWord* w) {
  if (k < 0) throw std::invalid_argument("negative point count");
  if (w && static_cast<int>(w->size()) != k)
    throw std::invalid_argument("color word length mismatch");
  if (!w && d.needs_colors())
    throw std::invalid_argument("category " + d.name() + " requires a color word");
  return enumerate_category(d, k, w);
}

Mat<Poly> gram_entries(const std::vector<SetPartition>& idx) {
  int n = static_cast<int>(idx.size());
  Mat<Poly> g(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      Poly e = Poly::monomial(Rat(1), idx[i].join(idx[j]).block_count());
      g(i, j) = e;
      if (j != i) g(j, i) = e;
    }
  return g;
}

Mat<Rat> gram_entries(const std::vector<SetPartition>& idx, long N) {
  int n = static_cast<int>(idx.size());
  Mat<Rat> g(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      Rat e(int_pow(Int(N), idx[i].join(idx[j]).block_count()));
      g(i, j) = e;
      if (j != i) g(j, i) = e;
    }
  return g;
}

SymbolicWeingarten weingarten_from(std::vector<SetPartition> idx) {
  Mat<Poly> g = gram_entries(idx);
  if (g.rows() == 0) {
    SymbolicWeingarten w;
    w.index = std::move(idx);
    w.adjugate = Mat<Poly>(0, 0);
    w.det = Poly(1);
    return w;
  }
  auto [adj, det] = adjugate_poly(g);
  SymbolicWeingarten w;
  w.index = std::move(idx);
  w.adjugate = std::move(adj);
  w.det = std::move(det);
  return w;
}

NumericWeingarten weingarten_from(std::vector<SetPartition> idx, long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  Mat<Rat> g = gram_entries(idx, N);
  NumericWeingarten w;
  w.basis = independent_rows(g);
  if (static_cast<int>(w.basis.size()) == g.rows())
    w.entries = invert(g);
  else
    w.entries = invert(submatrix(g, w.basis, w.basis));
  w.index = std::move(idx);
  return w;
}

}  // namespace

SymbolicGram gram_symbolic(const CategoryDescriptor& d, int k) {
  SymbolicGram g;
  g.index = category_index(d, k, nullptr);
  g.entries = gram_entries(g.index);
  return g;
}

SymbolicGram gram_symbolic(const CategoryDescriptor& d, const ColorWord& w) {
  SymbolicGram g;
  g.index = category_index(d, static_cast<int>(w.size()), &w);
  g.entries = gram_entries(g.index);
  return g;
}

NumericGram gram_numeric(const CategoryDescriptor& d, int k, long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  NumericGram g;
  g.index = category_index(d, k, nullptr);
  g.entries = gram_entries(g.index, N);
  return g;
}

NumericGram gram_numeric(const CategoryDescriptor& d, const ColorWord& w, long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  NumericGram g;
  g.index = category_index(d, static_cast<int>(w.size()), &w);
  g.entries = gram_entries(g.index, N);
  return g;
}

Mat<RatFunc> SymbolicWeingarten::entries() const {
  int n = static_cast<int>(index.size());
  Mat<RatFunc> e(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) e(i, j) = entry(i, j);
  return e;
}

SymbolicWeingarten weingarten_symbolic(const CategoryDescriptor& d, int k) {
  return weingarten_from(category_index(d, k, nullptr));
}

SymbolicWeingarten weingarten_symbolic(const CategoryDescriptor& d, const ColorWord& w) {
  return weingarten_from(category_index(d, static_cast<int>(w.size()), &w));
}

NumericWeingarten weingarten_numeric(const CategoryDescriptor& d, int k, long N) {
  return weingarten_from(category_index(d, k, nullptr), N);
}

NumericWeingarten weingarten_numeric(const CategoryDescriptor& d, const ColorWord& w,
                                     long N) {
  return weingarten_from(category_index(d, static_cast<int>(w.size()), &w), N);
}

namespace {

// The word-free and colored entry points key separately: a color-requiring
// family throws without a word, and that outcome must not be masked by a
// previously published colored entry.
const NumericWeingarten& publish_weingarten(const CategoryDescriptor& d, const std::string& tag,
                                            NumericWeingarten (*build)(const std::string&,
                                                                       const CategoryDescriptor&,
                                                                       long),
                                            long N) {
  using Key = std::tuple<std::string, std::string, long>;
  static std::mutex lock;
  static std::map<Key, std::shared_ptr<const NumericWeingarten>> store;
  Key key{d.name(), tag, N};
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = store.find(key);
    if (it != store.end()) return *it->second;
  }
  auto computed = std::make_shared<const NumericWeingarten>(build(tag, d, N));
  std::lock_guard<std::mutex> guard(lock);
  auto [it, inserted] = store.try_emplace(std::move(key), std::move(computed));
  return *it->second;
}

}  // namespace

const NumericWeingarten& weingarten_cached(const CategoryDescriptor& d, int k, long N) {
  return publish_weingarten(
      d, "#" + std::to_string(k),
      [](const std::string& tag, const CategoryDescriptor& dd, long n) {
        return weingarten_numeric(dd, std::stoi(tag.substr(1)), n);
      },
      N);
}

const NumericWeingarten& weingarten_cached(const CategoryDescriptor& d, const ColorWord& w,
                                           long N) {
  return publish_weingarten(
      d, w,
      [](const std::string& tag, const CategoryDescriptor& dd, long n) {
        return weingarten_numeric(dd, tag, n);
      },
      N);
}

std::pair<Mat<Poly>, Mat<Poly>> gram_AL_factorization(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("factorization limited to k <= 6");
  auto ps = enumerate_partitions(k);
  int n = static_cast<int>(ps.size());
  Mat<Poly> a(n, n), l(n, n);
  for (int i = 0; i < n; i++) {
    Poly fall = Poly::shifted_factorial(ps[i].block_count());
    for (int j = 0; j < n; j++) {
      if (ps[i].refines(ps[j])) a(i, j) = Poly(1);
      if (ps[j].refines(ps[i])) l(i, j) = fall;
    }
  }
  return {std::move(a), std::move(l)};
}

Poly lindstrom_det(int k) {
  if (k < 0 || k > 5) throw std::invalid_argument("product form limited to k <= 5");
  Poly out(1);
  for (const auto& pi : enumerate_partitions(k))
    out *= Poly::shifted_factorial(pi.block_count());
  return out;
}

Mat<RatFunc> sn_weingarten_mobius(int k) {
  if (k < 0 || k > 5) throw std::invalid_argument("Moebius inversion limited to k <= 5");
  auto ps = enumerate_partitions(k);
  int n = static_cast<int>(ps.size());
  Mat<RatFunc> w(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      SetPartition m = ps[i].meet(ps[j]);
      RatFunc e;
      for (const auto& tau : ps) {
        if (!tau.refines(m)) continue;
        Int c = mobius(tau, ps[i]) * mobius(tau, ps[j]);
        if (c == 0) continue;
        e += RatFunc(Poly(Rat(c)), Poly::shifted_factorial(tau.block_count()));
      }
      w(i, j) = e;
      if (j != i) w(j, i) = e;
    }
  return w;
}

Mat<Rat> sn_weingarten_mobius_numeric(int k, long N) {
  if (k < 0 || k > 5) throw std::invalid_argument("Moebius inversion limited to k <= 5");
  if (N < k) throw std::invalid_argument("needs N >= k so every term is finite");
  auto ps = enumerate_partitions(k);
  int n = static_cast<int>(ps.size());
  Mat<Rat> w(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      SetPartition m = ps[i].meet(ps[j]);
      Rat e(0);
      for (const auto& tau : ps) {
        if (!tau.refines(m)) continue;
        Int c = mobius(tau, ps[i]) * mobius(tau, ps[j]);
        if (c == 0) continue;
        e += Rat(c) / Rat(falling_factorial(Int(N), tau.block_count()));
      }
      w(i, j) = e;
      if (j != i) w(j, i) = e;
    }
  return w;
}

Poly chebyshev(long r) {
  if (r < 0) throw std::invalid_argument("negative index");
  Poly prev(1), cur = Poly::var();
  if (r == 0) return prev;
  for (long i = 1; i < r; i++) {
    Poly next = Poly::var() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// d_{m,r} for r = 1..m, from f_{m,r} = binom(2m, m-r) - binom(2m, m-r-1),
// d_{m,r} = f_{m,r} - f_{m,r+1} (f_{m,m+1} = 0).
std::vector<long> chebyshev_exponents(int m) {
  auto f = [m](int r) -> long {
    if (r > m) return 0;
    Int v = binomial(2 * m, m - r) - binomial(2 * m, m - r - 1);
    return v.convert_to<long>();
  };
  std::vector<long> d(m + 1, 0);
  for (int r = 1; r <= m; r++) d[r] = f(r) - f(r + 1);
  return d;
}

Poly nc2_product(int m) {
  Poly out(1);
  auto d = chebyshev_exponents(m);
  for (int r = 1; r <= m; r++)
    if (d[r] > 0) out *= chebyshev(r).pow(d[r]);
  return out;
}

SqrtProduct nc_product(int k) {
  SqrtProduct out;
  for (const auto& pi : enumerate_category(CategoryDescriptor{CategoryTag::NC, 0}, k))
    out.half_exponent += 2 * pi.block_count() - k;
  auto d = chebyshev_exponents(k);
  for (int r = 1; r <= k; r++) {
    if (d[r] == 0) continue;
    // P_r(sqrt(N)) = sqrt(N)^{r mod 2} * q_r(N): keep only the coefficients
    // of matching parity, reindexed by halves.
    Poly p = chebyshev(r);
    std::vector<Rat> q((r - r % 2) / 2 + 1);
    for (int e = r % 2; e <= r; e += 2) q[(e - r % 2) / 2] = p.coeff(e);
    if (r % 2 == 1) out.half_exponent += d[r];
    Poly qp(std::move(q));
    if (qp != Poly(1)) out.factors.emplace_back(std::move(qp), d[r]);
  }
  return out;
}

bool product_forms_match_anchors() {
  static const bool ok = [] {
    Poly n2 = Poly::monomial(Rat(1), 2);
    Poly a2 = n2 * (n2 - Poly(1));
    Poly a3 = Poly::monomial(Rat(1), 5) * (n2 - Poly(1)).pow(4) * (n2 - Poly(2));
    if (nc2_product(2) != a2 || nc2_product(3) != a3) return false;
    for (int k : {2, 3}) {
      CategoryDescriptor nc{CategoryTag::NC, 0};
      Poly direct = det_bareiss(gram_entries(enumerate_category(nc, k)));
      if (nc_product(k).expand() != direct) return false;
    }
    return true;
  }();
  return ok;
}

}  // namespace

Poly difrancesco_det(int half_k) {
  if (half_k < 1 || half_k > 4)
    throw std::invalid_argument("product form limited to 2..8 points");
  if (!product_forms_match_anchors())
    throw std::runtime_error("calibration failure: determinant product form "
                             "does not reproduce the worked small cases");
  return nc2_product(half_k);
}

SqrtProduct difrancesco_det_nc(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("product form limited to k <= 4");
  if (!product_forms_match_anchors())
    throw std::runtime_error("calibration failure: determinant product form "
                             "does not reproduce the worked small cases");
  return nc_product(k);
}

Poly SqrtProduct::expand() const {
  if (half_exponent % 2 != 0)
    throw std::domain_error("odd power of sqrt(N) does not expand");
  if (half_exponent < 0) throw std::domain_error("negative power of N");
  Poly out = Poly::monomial(Rat(1), static_cast<int>(half_exponent / 2));
  for (const auto& [p, e] : factors) out *= p.pow(e);
  return out;
}

std::string SqrtProduct::str() const {
  std::string s = "sqrt(N)^" + std::to_string(half_exponent);
  for (const auto& [p, e] : factors) {
    s += " * (" + p.str() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly zonal_det_pairings(int points) {
  if (points < 0 || points % 2 != 0 || points > 8)
    throw std::invalid_argument("needs an even point count <= 8");
  Poly out(1);
  for (const auto& lam : diagrams_of_size(points / 2)) {
    long e = lam.doubled().syt_count().convert_to<long>();
    out *= lam.content_poly().pow(e);
  }
  return out;
}

AsymptoticReport asymptotic_checks(const CategoryDescriptor& d, int k,
                                   const std::vector<long>& Ns) {
  if (Ns.empty()) throw std::invalid_argument("empty ladder");
  if (!std::is_sorted(Ns.begin(), Ns.end()))
    throw std::invalid_argument("ladder must be ascending");
  AsymptoticReport rep;
  rep.Ns = Ns;
  rep.index = category_index(d, k, nullptr);
  int n = static_cast<int>(rep.index.size());
  Mat<long> joins(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      joins(i, j) = rep.index[i].join(rep.index[j]).block_count();

  for (long N : Ns) {
    NumericWeingarten w = weingarten_from(rep.index, N);
    if (w.reduced())
      throw std::invalid_argument("ladder point N=" + std::to_string(N) +
                                  " has a singular Gram matrix");
    Rat diag(0), off(0);
    for (int i = 0; i < n; i++) {
      Rat v = abs(w.entries(i, i) * Rat(int_pow(Int(N), joins(i, i))) - 1);
      diag = std::max(diag, v);
      for (int j = 0; j < n; j++) {
        if (j == i) continue;
        Rat o = abs(w.entries(i, j)) * Rat(int_pow(Int(N), joins(i, j)));
        off = std::max(off, o);
      }
    }
    rep.max_diag_gap.push_back(diag);
    rep.max_offdiag.push_back(off);
  }

  Rat worst0 = std::max(rep.max_diag_gap[0], rep.max_offdiag[0]);
  rep.fitted_C = worst0 * Ns[0];
  rep.pass = true;
  for (size_t t = 0; t < Ns.size(); t++) {
    Rat bound = rep.fitted_C / Ns[t];
    if (rep.max_diag_gap[t] > bound || rep.max_offdiag[t] > bound) rep.pass = false;
    if (t > 0 && (rep.max_diag_gap[t] > rep.max_diag_gap[t - 1] ||
                  rep.max_offdiag[t] > rep.max_offdiag[t - 1]))
      rep.pass = false;
  }

  bool all_pairings = n > 0;
  for (const auto& pi : rep.index)
    if (!pi.is_pairing()) all_pairings = false;
  if (all_pairings) {
    long top = Ns.back();
    NumericWeingarten w = weingarten_from(rep.index, top);
    rep.leading = Mat<Rat>(n, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        long e = k / 2 + brauer_distance(rep.index[i], rep.index[j]);
        rep.leading(i, j) = w.entries(i, j) * Rat(int_pow(Int(top), e));
      }
  }
  return rep;
}

}  // namespace wg
