#include "wg/matrix.hpp"
#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace wg {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; i++) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long i = 1; i <= k; i++) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Int falling_factorial(const Int& x, long m) {
  Int r = 1;
  for (long i = 0; i < m; i++) r *= (x - i);
  return r;
}

Int int_pow(const Int& base, long exp) {
  Int r = 1, b = base;
  for (long e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

Int shifted_dfact(long x) {
  Int r = 1;
  for (long v = x - 1; v >= 2; v -= 2) r *= v;
  return r;
}

Int catalan(long k) { return binomial(2 * k, k) / (k + 1); }

std::string rat_str(const Rat& q) {
  Int num = numerator(q), den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  try {
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rat(Int(t));
    Int num(t.substr(0, slash)), den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

long bit_length(const Int& x) {
  if (x == 0) return 0;
  Int a = abs(x);
  return static_cast<long>(boost::multiprecision::msb(a)) + 1;
}

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(long c) {
  if (c != 0) c_.push_back(Rat(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::var() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int e) {
  if (c == 0) return Poly();
  std::vector<Rat> v(e + 1, Rat(0));
  v[e] = c;
  return Poly(std::move(v));
}

Poly Poly::shifted_factorial(long m) {
  Poly r(1);
  for (long i = 0; i < m; i++) r *= var() - Poly(i);
  return r;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& a) {
  if (s == 0) return Poly();
  Poly r = a;
  for (Rat& c : r.c_) c *= s;
  return r;
}

Poly Poly::pow(long e) const {
  Poly r(1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  int db = b.degree();
  const Rat& lb = b.lead();
  std::vector<Rat> qc(std::max(0, a.degree() - db + 1), Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int sh = r.degree() - db;
    Rat f = r.lead() / lb;
    qc[sh] = f;
    std::vector<Rat> rc = r.c_;
    for (int i = 0; i <= db; i++) rc[sh + i] -= f * b.c_[i];
    r = Poly(std::move(rc));
  }
  q = Poly(std::move(qc));
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

// Integer coefficients, content 1, positive leading coefficient.
Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int l = 1;
  for (const Rat& c : p.coeffs()) l = lcm(l, Int(denominator(c)));
  Int g = 0;
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat s = c * Rat(l);
    v.push_back(s);
    g = gcd(g, Int(numerator(s)));
  }
  if (p.lead() < 0) g = -g;
  for (Rat& c : v) c /= Rat(g);
  return Poly(std::move(v));
}

} // namespace

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.lead()) * a;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i < static_cast<int>(c_.size()); i++) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string term;
    if (i == 0) {
      term = rat_str(a);
    } else {
      std::string var = (i == 1) ? "N" : "N^" + std::to_string(i);
      term = (a == 1) ? var : rat_str(a) + "*" + var;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

Poly Poly::parse(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty polynomial");
  Poly result;
  size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      pos++;
      if (pos >= t.size()) throw std::invalid_argument("dangling sign: " + s);
    }
    Rat coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
      size_t start = pos;
      while (pos < t.size() &&
             (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
        pos++;
      coef = parse_rat(t.substr(start, pos - start));
      have_coef = true;
      if (pos < t.size() && t[pos] == '*') pos++;
    }
    int e = 0;
    if (pos < t.size() && t[pos] == 'N') {
      pos++;
      e = 1;
      if (pos < t.size() && t[pos] == '^') {
        pos++;
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) pos++;
        if (start == pos) throw std::invalid_argument("bad exponent: " + s);
        e = std::stoi(t.substr(start, pos - start));
      }
    } else if (!have_coef) {
      throw std::invalid_argument("bad polynomial term: " + s);
    }
    if (sign < 0) coef = -coef;
    result += monomial(coef, e);
    if (pos < t.size() && t[pos] != '+' && t[pos] != '-')
      throw std::invalid_argument("bad polynomial syntax: " + s);
  }
  return result;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  Rat lc = den_.lead();
  if (lc != 1) {
    Rat inv = Rat(1) / lc;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::pair<int, std::vector<Rat>> laurent_at_infinity(const RatFunc& f, int count) {
  return laurent_at_infinity(f.num(), f.den(), count);
}

std::pair<int, std::vector<Rat>> laurent_at_infinity(const Poly& num, const Poly& den,
                                                     int count) {
  if (count < 0) count = 0;
  if (den.is_zero()) throw std::domain_error("division by zero rational function");
  if (num.is_zero()) return {0, std::vector<Rat>(count, Rat(0))};
  int a = num.degree(), b = den.degree();
  std::vector<Rat> nr(a + 1), dr(b + 1);
  for (int i = 0; i <= a; i++) nr[i] = num.coeff(a - i);
  for (int i = 0; i <= b; i++) dr[i] = den.coeff(b - i);
  std::vector<Rat> s(count, Rat(0));
  for (int m = 0; m < count; m++) {
    Rat acc = m <= a ? nr[m] : Rat(0);
    for (int j = 1; j <= std::min(m, b); j++) acc -= dr[j] * s[m - j];
    s[m] = acc / dr[0];
  }
  return {b - a, s};
}

std::vector<std::pair<Int, int>> integer_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("roots of zero polynomial");
  std::vector<std::pair<Int, int>> roots;
  int v = 0;
  while (p.coeff(v) == 0) v++;
  if (v > 0) roots.emplace_back(Int(0), v);
  int n = p.degree() - v;
  if (n == 0) return roots;

  Int l = 1;
  for (int i = 0; i <= n; i++) l = lcm(l, Int(denominator(p.coeff(v + i))));
  std::vector<Int> c(n + 1);
  for (int i = 0; i <= n; i++) c[i] = Int(numerator(p.coeff(v + i) * Rat(l)));

  // Fujiwara-style bound 2 * max_j |c[n-j]/c[n]|^(1/j), rounded up in bits.
  long bn = bit_length(c[n]);
  long cap = 1;
  for (int j = 1; j <= n; j++) {
    if (c[n - j] == 0) continue;
    long e = (bit_length(c[n - j]) - bn + 1 + j) / j;
    cap = std::max(cap, e);
  }
  if (cap > 24) throw std::domain_error("integer root bound too large");
  long bound = (1L << cap) * 2;

  auto deflate = [&](const Int& r) -> bool {
    std::vector<Int> b(n);
    b[n - 1] = c[n];
    for (int i = n - 2; i >= 0; i--) b[i] = c[i + 1] + r * b[i + 1];
    if (c[0] + r * b[0] != 0) return false;
    c = std::move(b);
    n--;
    return true;
  };

  for (long d = 1; d <= bound && n > 0; d++) {
    if (c[0] % d != 0) continue;
    for (long sgn : {1L, -1L}) {
      Int r = Int(sgn * d);
      int mult = 0;
      while (n > 0 && deflate(r)) mult++;
      if (mult > 0) roots.emplace_back(r, mult);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly det_bareiss(Mat<Poly> a) {
  int n = a.rows();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (int k = 0; k + 1 < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (!a(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Poly();
    if (piv != k) {
      for (int j = k; j < n; j++) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        a(i, j) = Poly::divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = Poly();
    }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Rat det_exact(Mat<Rat> a) {
  int n = a.rows();
  Rat det(1);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int j = k; j < n; j++) std::swap(a(piv, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    Rat inv = Rat(1) / a(k, k);
    for (int i = k + 1; i < n; i++) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) * inv;
      for (int j = k + 1; j < n; j++) a(i, j) -= f * a(k, j);
      a(i, k) = Rat(0);
    }
  }
  return det;
}

Mat<Rat> invert(const Mat<Rat>& a0) {
  int n = a0.rows();
  if (n != a0.cols()) throw std::invalid_argument("invert: not square");
  Mat<Rat> a = a0, r = Mat<Rat>::identity(n);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != k)
      for (int j = 0; j < n; j++) {
        std::swap(a(piv, j), a(k, j));
        std::swap(r(piv, j), r(k, j));
      }
    Rat inv = Rat(1) / a(k, k);
    for (int j = 0; j < n; j++) {
      a(k, j) *= inv;
      r(k, j) *= inv;
    }
    for (int i = 0; i < n; i++) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (int j = 0; j < n; j++) {
        a(i, j) -= f * a(k, j);
        r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

namespace {

Poly interpolate_rat(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  int m = static_cast<int>(xs.size());
  std::vector<Rat> dd = ys;
  for (int j = 1; j < m; j++)
    for (int i = m - 1; i >= j; i--) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly c;
  for (int i = m - 1; i >= 0; i--) c = c * (Poly::var() - Poly(xs[i])) + Poly(dd[i]);
  return c;
}

} // namespace

// Adjugate by evaluation at integer points off the determinant's zero set,
// then entrywise interpolation.
Mat<RatFunc> invert(const Mat<Poly>& a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("invert: not square");
  Poly d = det_poly(a);
  if (d.is_zero()) throw std::domain_error("singular matrix");
  long deg_bound = 0;
  for (int i = 0; i < n; i++) {
    int dm = 0;
    for (int j = 0; j < n; j++) dm = std::max(dm, std::max(0, a(i, j).degree()));
    deg_bound += dm;
  }
  int m = static_cast<int>(deg_bound) + 1;
  std::vector<Rat> xs;
  std::vector<Mat<Rat>> adj;
  xs.reserve(m);
  adj.reserve(m);
  for (long x = 0; static_cast<int>(xs.size()) < m; x++) {
    Rat dx = d.eval(Rat(x));
    if (dx == 0) continue;
    Mat<Rat> ax(n, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) ax(i, j) = a(i, j).eval(Rat(x));
    Mat<Rat> ix = invert(ax);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) ix(i, j) *= dx;
    xs.push_back(Rat(x));
    adj.push_back(std::move(ix));
  }
  Mat<RatFunc> w(n, n);
  std::vector<Rat> ys(m);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      for (int t = 0; t < m; t++) ys[t] = adj[t](i, j);
      w(i, j) = RatFunc(interpolate_rat(xs, ys), d);
    }
  return w;
}

std::vector<int> independent_rows(const Mat<Rat>& a) {
  int n = a.rows(), m = a.cols();
  std::vector<std::vector<Rat>> basis;
  std::vector<int> lead_col, picked;
  for (int i = 0; i < n; i++) {
    std::vector<Rat> row(m);
    for (int j = 0; j < m; j++) row[j] = a(i, j);
    for (size_t b = 0; b < basis.size(); b++) {
      const Rat& f = row[lead_col[b]];
      if (f == 0) continue;
      Rat g = f;
      for (int j = 0; j < m; j++) row[j] -= g * basis[b][j];
    }
    int lc = -1;
    for (int j = 0; j < m; j++)
      if (row[j] != 0) {
        lc = j;
        break;
      }
    if (lc < 0) continue;
    Rat inv = Rat(1) / row[lc];
    for (int j = 0; j < m; j++) row[j] *= inv;
    for (size_t b = 0; b < basis.size(); b++) {
      const Rat& f = basis[b][lc];
      if (f == 0) continue;
      Rat g = f;
      for (int j = 0; j < m; j++) basis[b][j] -= g * row[j];
    }
    basis.push_back(std::move(row));
    lead_col.push_back(lc);
    picked.push_back(i);
  }
  return picked;
}

Mat<Rat> submatrix(const Mat<Rat>& a, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  Mat<Rat> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < cols.size(); j++) r(i, j) = a(rows[i], cols[j]);
  return r;
}

bool adjugate_identity_holds(const Mat<Poly>& a, const Mat<Poly>& adj, const Poly& det) {
  int n = a.rows();
  if (a.cols() != n || adj.rows() != n || adj.cols() != n) return false;
  std::vector<Rat> acc;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      acc.clear();
      for (int l = 0; l < n; l++) {
        const auto& ac = a(i, l).coeffs();
        const auto& bc = adj(l, j).coeffs();
        if (ac.empty() || bc.empty()) continue;
        if (acc.size() < ac.size() + bc.size() - 1) acc.resize(ac.size() + bc.size() - 1);
        for (size_t s = 0; s < ac.size(); s++) {
          if (ac[s] == 0) continue;
          for (size_t t = 0; t < bc.size(); t++)
            if (bc[t] != 0) acc[s + t] += ac[s] * bc[t];
        }
      }
      Poly prod{std::vector<Rat>(acc)};
      if (prod != (i == j ? det : Poly())) return false;
    }
  return true;
}

} // namespace wg
