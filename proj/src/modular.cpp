#include "wg/modular.hpp"

#include "wg/matrix.hpp"
#include "wg/poly.hpp"

#include <stdexcept>
#include <utility>

namespace wg {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::powm;

Montgomery64::Montgomery64(uint64_t mod) : mod_(mod) {
  if (mod < 3 || !(mod & 1) || mod >= (1ull << 62))
    throw std::invalid_argument("modulus must be odd and below 2^62");
  uint64_t inv = mod;
  for (int i = 0; i < 6; i++) inv *= 2 - mod * inv;
  ninv_ = ~inv + 1;
  r1_ = (~uint64_t(0) % mod) + 1;
  if (r1_ == mod) r1_ = 0;
  r2_ = static_cast<uint64_t>((static_cast<unsigned __int128>(r1_) * r1_) % mod);
}

uint64_t Montgomery64::redc(unsigned __int128 t) const {
  uint64_t m = static_cast<uint64_t>(t) * ninv_;
  uint64_t r = static_cast<uint64_t>((t + static_cast<unsigned __int128>(m) * mod_) >> 64);
  return r >= mod_ ? r - mod_ : r;
}

uint64_t Montgomery64::to(uint64_t x) const {
  return redc(static_cast<unsigned __int128>(x % mod_) * r2_);
}

uint64_t Montgomery64::from(uint64_t x) const { return redc(x); }

uint64_t Montgomery64::mul(uint64_t a, uint64_t b) const {
  return redc(static_cast<unsigned __int128>(a) * b);
}

uint64_t Montgomery64::pow(uint64_t a, uint64_t e) const {
  uint64_t r = r1_;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

uint64_t Montgomery64::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero residue");
  return pow(a, mod_ - 2);
}

namespace {

uint64_t mulmod_u128(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod_u128(r, a, m);
    a = mulmod_u128(a, a, m);
  }
  return r;
}

constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kMrBases)
    if (n % p == 0) return n == p;
  uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    s++;
  }
  for (uint64_t a : kMrBases) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; i++) {
      x = mulmod_u128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> det_primes(int count) {
  std::vector<uint64_t> out;
  for (uint64_t p = (1ull << 62) - 1; static_cast<int>(out.size()) < count; p -= 2)
    if (is_prime_u64(p)) out.push_back(p);
  return out;
}

namespace {

// Entries in Montgomery form; returns the determinant in Montgomery form.
uint64_t det_mont(std::vector<std::vector<uint64_t>>& a, const Montgomery64& mg) {
  int n = static_cast<int>(a.size());
  uint64_t det = mg.one();
  bool neg = false;
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      neg = !neg;
    }
    det = mg.mul(det, a[k][k]);
    uint64_t inv = mg.inv(a[k][k]);
    const auto& rk = a[k];
    for (int i = k + 1; i < n; i++) {
      auto& ri = a[i];
      if (ri[k] == 0) continue;
      uint64_t f = mg.mul(ri[k], inv);
      for (int j = k + 1; j < n; j++) ri[j] = mg.sub(ri[j], mg.mul(f, rk[j]));
      ri[k] = 0;
    }
  }
  if (neg) det = mg.sub(0, det);
  return det;
}

uint64_t mod_int(const Int& z, uint64_t p) {
  Int r = z % Int(p);
  if (r < 0) r += Int(p);
  return r.convert_to<uint64_t>();
}

} // namespace

uint64_t det_mod(std::vector<std::vector<uint64_t>> a, const Montgomery64& mg) {
  for (auto& row : a)
    for (auto& x : row) x = mg.to(x);
  return mg.from(det_mont(a, mg));
}

std::vector<uint64_t> newton_diff_inverses(const std::vector<uint64_t>& xs,
                                           const Montgomery64& mg) {
  uint64_t p = mg.mod();
  uint64_t maxd = xs.empty() ? 0 : xs.back() - xs.front();
  std::vector<uint64_t> inv(maxd + 1, 0);
  if (maxd >= 1) inv[1] = 1;
  for (uint64_t d = 2; d <= maxd; d++) inv[d] = mulmod_u128(p - p / d, inv[p % d], p);
  for (auto& v : inv) v = mg.to(v);
  return inv;
}

std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const Montgomery64& mg) {
  return interpolate_mod(xs, ys, mg, newton_diff_inverses(xs, mg));
}

std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      const std::vector<uint64_t>& ys,
                                      const Montgomery64& mg,
                                      const std::vector<uint64_t>& dinv) {
  int m = static_cast<int>(xs.size());
  std::vector<uint64_t> x(m), dd(m);
  for (int i = 0; i < m; i++) {
    x[i] = mg.to(xs[i]);
    dd[i] = mg.to(ys[i]);
  }
  for (int j = 1; j < m; j++)
    for (int i = m - 1; i >= j; i--)
      dd[i] = mg.mul(mg.sub(dd[i], dd[i - 1]), dinv[xs[i] - xs[i - j]]);
  std::vector<uint64_t> c(m, 0);
  c[0] = dd[m - 1];
  int len = 1;
  for (int i = m - 2; i >= 0; i--) {
    for (int j = len; j >= 1; j--) c[j] = mg.sub(c[j - 1], mg.mul(x[i], c[j]));
    c[0] = mg.add(mg.sub(0, mg.mul(x[i], c[0])), dd[i]);
    len++;
  }
  for (auto& v : c) v = mg.from(v);
  return c;
}

Int crt_symmetric(const std::vector<uint64_t>& rs, const std::vector<uint64_t>& ps) {
  Int x = 0, m = 1;
  for (size_t i = 0; i < ps.size(); i++) {
    Int p(ps[i]);
    Int t = (Int(rs[i]) - x) % p;
    if (t < 0) t += p;
    Int mi = m % p;
    Int inv = powm(mi, Int(p - 2), p);
    t = (t * inv) % p;
    x += m * t;
    m *= p;
  }
  if (x * 2 > m) x -= m;
  return x;
}

Poly det_modular(const Mat<Poly>& a) {
  int n = a.rows();
  if (n == 0) return Poly(1);
  long deg_bound = 0;
  std::vector<std::vector<std::vector<Int>>> ic(n);
  Int scale = 1;
  Int bound = factorial(n);
  for (int i = 0; i < n; i++) {
    Int l = 1;
    for (int j = 0; j < n; j++)
      for (const Rat& c : a(i, j).coeffs()) l = lcm(l, Int(denominator(c)));
    scale *= l;
    Int row_max = 0;
    long dmax = 0;
    ic[i].resize(n);
    for (int j = 0; j < n; j++) {
      const auto& cs = a(i, j).coeffs();
      Int norm = 0;
      ic[i][j].reserve(cs.size());
      for (const Rat& c : cs) {
        Int z(numerator(c * Rat(l)));
        norm += abs(z);
        ic[i][j].push_back(std::move(z));
      }
      if (!cs.empty()) dmax = std::max(dmax, static_cast<long>(cs.size()) - 1);
      if (norm > row_max) row_max = norm;
    }
    if (row_max == 0) return Poly();
    bound *= row_max;
    deg_bound += dmax;
  }

  int nprimes = static_cast<int>((bit_length(bound) + 1 + 60) / 61);
  std::vector<uint64_t> primes = det_primes(nprimes);
  int m = static_cast<int>(deg_bound) + 1;
  std::vector<uint64_t> xs(m);
  for (int x = 0; x < m; x++) xs[x] = static_cast<uint64_t>(x);

  std::vector<std::vector<uint64_t>> coeffs_mod(primes.size());
  for (size_t pi = 0; pi < primes.size(); pi++) {
    Montgomery64 mg(primes[pi]);
    std::vector<std::vector<std::vector<uint64_t>>> rc(n);
    for (int i = 0; i < n; i++) {
      rc[i].resize(n);
      for (int j = 0; j < n; j++) {
        rc[i][j].reserve(ic[i][j].size());
        for (const Int& z : ic[i][j]) rc[i][j].push_back(mg.to(mod_int(z, primes[pi])));
      }
    }
    std::vector<std::vector<uint64_t>> mat(n, std::vector<uint64_t>(n));
    std::vector<uint64_t> ys(m);
    for (int x = 0; x < m; x++) {
      uint64_t xm = mg.to(static_cast<uint64_t>(x));
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
          uint64_t v = 0;
          const auto& cs = rc[i][j];
          for (size_t t = cs.size(); t-- > 0;) v = mg.add(mg.mul(v, xm), cs[t]);
          mat[i][j] = v;
        }
      ys[x] = mg.from(det_mont(mat, mg));
    }
    coeffs_mod[pi] = interpolate_mod(xs, ys, mg);
  }

  std::vector<Rat> out(m);
  std::vector<uint64_t> rs(primes.size());
  for (int j = 0; j < m; j++) {
    for (size_t pi = 0; pi < primes.size(); pi++) rs[pi] = coeffs_mod[pi][j];
    out[j] = Rat(crt_symmetric(rs, primes)) / Rat(scale);
  }
  return Poly(std::move(out));
}

Poly det_poly(const Mat<Poly>& a, int bareiss_cutoff) {
  if (a.rows() <= bareiss_cutoff) return det_bareiss(a);
  return det_modular(a);
}

namespace {

// Row-scaled integer form B = diag(row_scale) * A.
struct IntMatrix {
  int n = 0;
  std::vector<std::vector<std::vector<Int>>> coeff;  // [i][j] -> poly coeffs
  std::vector<Int> row_scale;
  long deg_sum = 0;  // sum over rows of the max entry degree
  Int bound = 0;     // >= every det / cofactor coefficient of B; 0 when a row vanishes
};

IntMatrix clear_rows(const Mat<Poly>& a) {
  IntMatrix b;
  b.n = a.rows();
  b.coeff.resize(b.n);
  b.row_scale.assign(b.n, Int(1));
  Int prod = factorial(b.n);
  for (int i = 0; i < b.n; i++) {
    Int l = 1;
    for (int j = 0; j < b.n; j++)
      for (const Rat& c : a(i, j).coeffs()) l = lcm(l, Int(denominator(c)));
    b.row_scale[i] = l;
    Int row_max = 0;
    long dmax = 0;
    b.coeff[i].resize(b.n);
    for (int j = 0; j < b.n; j++) {
      const auto& cs = a(i, j).coeffs();
      Int norm = 0;
      b.coeff[i][j].reserve(cs.size());
      for (const Rat& c : cs) {
        Int z(numerator(c * Rat(l)));
        norm += abs(z);
        b.coeff[i][j].push_back(std::move(z));
      }
      if (!cs.empty()) dmax = std::max(dmax, static_cast<long>(cs.size()) - 1);
      if (norm > row_max) row_max = norm;
    }
    if (row_max == 0) return b;  // bound stays 0
    if (row_max > 1) prod *= row_max;
    b.deg_sum += dmax;
  }
  b.bound = prod;
  return b;
}

std::vector<std::vector<std::vector<uint64_t>>> to_residues(const IntMatrix& b,
                                                            const Montgomery64& mg, uint64_t p) {
  std::vector<std::vector<std::vector<uint64_t>>> rc(b.n);
  for (int i = 0; i < b.n; i++) {
    rc[i].resize(b.n);
    for (int j = 0; j < b.n; j++) {
      rc[i][j].reserve(b.coeff[i][j].size());
      for (const Int& z : b.coeff[i][j]) rc[i][j].push_back(mg.to(mod_int(z, p)));
    }
  }
  return rc;
}

void eval_point(const std::vector<std::vector<std::vector<uint64_t>>>& rc, uint64_t xm,
                const Montgomery64& mg, std::vector<std::vector<uint64_t>>& out) {
  int n = static_cast<int>(rc.size());
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      uint64_t v = 0;
      const auto& cs = rc[i][j];
      for (size_t t = cs.size(); t-- > 0;) v = mg.add(mg.mul(v, xm), cs[t]);
      out[i][j] = v;
    }
}

// Gauss-Jordan; returns det (Montgomery form, 0 when singular) and fills inv.
uint64_t invert_mont(std::vector<std::vector<uint64_t>> a, const Montgomery64& mg,
                     std::vector<std::vector<uint64_t>>& inv) {
  int n = static_cast<int>(a.size());
  inv.assign(n, std::vector<uint64_t>(n, 0));
  for (int i = 0; i < n; i++) inv[i][i] = mg.one();
  uint64_t det = mg.one();
  for (int c = 0; c < n; c++) {
    int piv = -1;
    for (int r = c; r < n; r++)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      std::swap(inv[piv], inv[c]);
      det = mg.sub(0, det);
    }
    det = mg.mul(det, a[c][c]);
    uint64_t pinv = mg.inv(a[c][c]);
    for (int j = 0; j < n; j++) {
      a[c][j] = mg.mul(a[c][j], pinv);
      inv[c][j] = mg.mul(inv[c][j], pinv);
    }
    for (int r = 0; r < n; r++) {
      if (r == c || a[r][c] == 0) continue;
      uint64_t f = a[r][c];
      for (int j = 0; j < n; j++) {
        a[r][j] = mg.sub(a[r][j], mg.mul(f, a[c][j]));
        inv[r][j] = mg.sub(inv[r][j], mg.mul(f, inv[c][j]));
      }
    }
  }
  return det;
}

// One prime's contribution: interpolated residue polynomials of adj(B) and
// det(B). Returns false when the prime divides too many det values.
bool adjugate_residues(const IntMatrix& b, uint64_t p, long npoints,
                       std::vector<std::vector<uint64_t>>& adj_coeffs,
                       std::vector<uint64_t>& det_coeffs) {
  Montgomery64 mg(p);
  auto rc = to_residues(b, mg, p);
  int n = b.n;
  std::vector<uint64_t> xs;
  xs.reserve(npoints);
  std::vector<std::vector<uint64_t>> vals(static_cast<size_t>(n) * n);
  for (auto& v : vals) v.reserve(npoints);
  std::vector<uint64_t> det_vals;
  det_vals.reserve(npoints);
  std::vector<std::vector<uint64_t>> mat(n, std::vector<uint64_t>(n)), inv;
  for (uint64_t x = 0; static_cast<long>(xs.size()) < npoints; x++) {
    if (x > static_cast<uint64_t>(npoints + b.deg_sum + 4096)) return false;
    eval_point(rc, mg.to(x), mg, mat);
    uint64_t det = invert_mont(mat, mg, inv);
    if (det == 0) continue;  // root of det at this residue
    xs.push_back(x);
    det_vals.push_back(mg.from(det));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        vals[static_cast<size_t>(i) * n + j].push_back(mg.from(mg.mul(det, inv[i][j])));
  }
  std::vector<uint64_t> dinv = newton_diff_inverses(xs, mg);
  adj_coeffs.resize(vals.size());
  for (size_t e = 0; e < vals.size(); e++)
    adj_coeffs[e] = interpolate_mod(xs, vals[e], mg, dinv);
  det_coeffs = interpolate_mod(xs, det_vals, mg, dinv);
  return true;
}

void garner_step(std::vector<Int>& acc, const std::vector<uint64_t>& res, const Int& mod,
                 uint64_t p, bool first) {
  Int ip(p);
  Int minv = 0;
  if (!first) {
    Int mm = mod % ip;
    minv = powm(mm, Int(p - 2), ip);
  }
  for (size_t t = 0; t < acc.size(); t++) {
    if (first) {
      acc[t] = Int(res[t]);
    } else {
      Int d = (Int(res[t]) - acc[t] % ip) % ip;
      if (d < 0) d += ip;
      d = (d * minv) % ip;
      acc[t] += mod * d;
    }
  }
}

}  // namespace

std::pair<Mat<Poly>, Poly> adjugate_poly(const Mat<Poly>& a) {
  int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("adjugate needs a square matrix");
  if (n == 0) return {Mat<Poly>(0, 0), Poly(1)};
  if (n == 1) {
    Mat<Poly> adj(1, 1);
    adj(0, 0) = Poly(1);
    return {adj, a(0, 0)};
  }
  IntMatrix b = clear_rows(a);
  if (b.bound == 0) throw std::domain_error("matrix is symbolically singular");
  long npoints = b.deg_sum + 1;
  int nprimes = static_cast<int>((bit_length(2 * b.bound) + 60) / 61);
  std::vector<uint64_t> primes = det_primes(nprimes + 6);

  std::vector<Int> acc(static_cast<size_t>(n) * n * npoints), acc_det(npoints);
  Int mod = 1;
  int used = 0;
  std::vector<std::vector<uint64_t>> adj_coeffs;
  std::vector<uint64_t> det_coeffs, flat;
  for (uint64_t p : primes) {
    if (used == nprimes) break;
    if (!adjugate_residues(b, p, npoints, adj_coeffs, det_coeffs)) continue;
    flat.resize(acc.size());
    for (size_t e = 0; e < adj_coeffs.size(); e++)
      std::copy(adj_coeffs[e].begin(), adj_coeffs[e].end(), flat.begin() + e * npoints);
    garner_step(acc, flat, mod, p, used == 0);
    garner_step(acc_det, det_coeffs, mod, p, used == 0);
    mod *= p;
    used++;
  }
  if (used < nprimes) throw std::runtime_error("ran out of usable primes; determinant may vanish");

  Int half = mod / 2;
  auto symmetric = [&](Int& v) {
    if (v > half) v -= mod;
  };
  for (auto& v : acc) symmetric(v);
  for (auto& v : acc_det) symmetric(v);

  // B = diag(d) A gives adj(A)(i,j) = adj(B)(i,j) d_j / prod(d),
  // det(A) = det(B) / prod(d).
  Int dprod = 1;
  for (const Int& d : b.row_scale) dprod *= d;
  Mat<Poly> adj(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      std::vector<Rat> cs(npoints);
      size_t base = (static_cast<size_t>(i) * n + j) * npoints;
      for (long t = 0; t < npoints; t++)
        cs[t] = Rat(acc[base + t] * b.row_scale[j], dprod);
      adj(i, j) = Poly(std::move(cs));
    }
  std::vector<Rat> dc(npoints);
  for (long t = 0; t < npoints; t++) dc[t] = Rat(acc_det[t], dprod);
  return {adj, Poly(std::move(dc))};
}

} // namespace wg
