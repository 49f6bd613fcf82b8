#pragma once

#include "wg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wg {

// Dense univariate polynomial in the size symbol N over Rat, lowest degree
// first. The zero polynomial is the empty coefficient vector.
class Poly {
public:
  Poly() = default;
  Poly(const Rat& c);
  Poly(long c);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly var();                       // N
  static Poly monomial(const Rat& c, int e);
  static Poly shifted_factorial(long m);   // N(N-1)...(N-m+1)

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const;                  // 0 outside stored range
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rat& s, const Poly& a);
  bool operator==(const Poly&) const = default;

  Poly pow(long e) const;
  Rat eval(const Rat& x) const;

  // Quotient/remainder; exact division throws std::domain_error when the
  // remainder is nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly divexact(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);         // monic

  Poly derivative() const;

  // Text form "c0 + c1*N + c2*N^2" with rational coefficients; unit
  // coefficients and zero terms elided, e.g. "-N + N^2".
  std::string str() const;
  static Poly parse(const std::string& s);

private:
  std::vector<Rat> c_;
  void trim();
};

// Reduced quotient of polynomials; denominator monic, gcd(num, den) = 1,
// zero is 0/1.
class RatFunc {
public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(long c) : num_(c), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFunc(Poly num, Poly den);
  RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  bool operator==(const RatFunc&) const = default;

  Rat eval(const Rat& x) const;            // throws on pole
  std::string str() const;

private:
  Poly num_, den_;
  void reduce();
};

// Laurent expansion at N = infinity: f(N) = sum_{m >= lead_order} c_m N^{-m}.
// Returns lead_order and the first `count` coefficients c_{lead_order},...
// For f = 0, lead_order = 0 and all coefficients are zero. The two-polynomial
// form expands num/den without reducing the fraction first.
std::pair<int, std::vector<Rat>> laurent_at_infinity(const RatFunc& f, int count);
std::pair<int, std::vector<Rat>> laurent_at_infinity(const Poly& num, const Poly& den,
                                                     int count);

// All integer roots with multiplicities, found by bounded divisor testing on
// the trailing coefficient plus exact deflation. Sorted ascending.
std::vector<std::pair<Int, int>> integer_roots(const Poly& p);

} // namespace wg
