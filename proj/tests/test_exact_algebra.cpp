#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wg/matrix.hpp"
#include "wg/modular.hpp"
#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <random>

using namespace wg;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-9, 9), d(1, 4);
  std::vector<Rat> v(deg(rng) + 1);
  for (auto& x : v) x = Rat(c(rng)) / Rat(d(rng));
  return Poly(std::move(v));
}

Mat<Poly> random_mat(std::mt19937& rng, int n, int max_deg) {
  Mat<Poly> a(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a(i, j) = random_poly(rng, max_deg);
  return a;
}

} // namespace

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(52, 26) == Int("495918532948104"));
  CHECK(falling_factorial(Int(7), 3) == 210);
  CHECK(falling_factorial(Int(3), 5) == 0);
  CHECK(int_pow(Int(3), 7) == 2187);
  CHECK(int_pow(Int(-2), 5) == -32);

  // shifted convention: x!! = (x-1)(x-3)...
  long sdf[] = {1, 1, 1, 2, 3, 8, 15, 48, 105};
  for (long x = 0; x <= 8; x++) CHECK(shifted_dfact(x) == sdf[x]);

  long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (long k = 0; k <= 8; k++) CHECK(catalan(k) == cat[k]);

  CHECK(bit_length(Int(0)) == 0);
  CHECK(bit_length(Int(1)) == 1);
  CHECK(bit_length(Int(-8)) == 4);
  CHECK(bit_length(Int(255)) == 8);
}

TEST_CASE("rational text form") {
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(Rat(-3) / Rat(6)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(parse_rat("3/6") == Rat(1) / Rat(2));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat(" 22 / 7 ") == Rat(22) / Rat(7));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("polynomial basics") {
  Poly n = Poly::var();
  CHECK(Poly().is_zero());
  CHECK(Poly().str() == "0");
  CHECK(Poly::parse("0").is_zero());
  CHECK((n * n - n).str() == "-N + N^2");
  CHECK(Poly::shifted_factorial(2) == n * n - n);
  CHECK(Poly::shifted_factorial(0) == Poly(1));
  CHECK(Poly::shifted_factorial(3).eval(Rat(5)) == 60);

  Poly p = Poly::parse("2 - N + 1/2*N^3");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(3) == Rat(1) / Rat(2));
  CHECK(p.eval(Rat(2)) == 4);
  CHECK(Poly::parse(p.str()) == p);
  CHECK(Poly::parse("1/2*N^3 - N + 2") == p);
  CHECK(Poly::parse("N") == n);
  CHECK(Poly::parse("-N^2") == -(n * n));
  CHECK_THROWS_AS(Poly::parse("N^"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse("x + 1"), std::invalid_argument);

  CHECK((n + Poly(1)).pow(3) == Poly::parse("1 + 3*N + 3*N^2 + N^3"));
  CHECK(p.derivative() == Poly::parse("-1 + 3/2*N^2"));
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; trial++) {
    Poly a = random_poly(rng, 6), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
  }
  Poly n = Poly::var();
  CHECK(Poly::gcd(n * n - n, n) == n);
  CHECK(Poly::gcd(Poly(), n) == n);
  Poly g = Poly::gcd((n - Poly(1)) * (n + Poly(2)), (n - Poly(1)) * (n - Poly(3)));
  CHECK(g == n - Poly(1));
  CHECK(Poly::divexact(n * n - n, n) == n - Poly(1));
  CHECK_THROWS_AS(Poly::divexact(n * n + Poly(1), n), std::domain_error);
}

TEST_CASE("rational functions") {
  Poly n = Poly::var();
  RatFunc f(n, n * n - n);
  CHECK(f.num() == Poly(1));
  CHECK(f.den() == n - Poly(1));
  RatFunc g = f + RatFunc(Poly(1), n - Poly(1));
  CHECK(g.num() == Poly(2));
  CHECK(g.den() == n - Poly(1));
  CHECK((f - f).is_zero());
  CHECK((f / f) == RatFunc(Rat(1)));
  CHECK(f.eval(Rat(3)) == Rat(1) / Rat(2));
  CHECK_THROWS_AS(f.eval(Rat(1)), std::domain_error);
  CHECK_THROWS_AS(f / RatFunc(), std::domain_error);
  // denominator kept monic
  RatFunc h(Poly(3), Poly::parse("2*N + 2"));
  CHECK(h.den() == n + Poly(1));
  CHECK(h.num() == Poly(Rat(3) / Rat(2)));
}

TEST_CASE("laurent expansion at infinity") {
  Poly n = Poly::var();
  auto [lead, cs] = laurent_at_infinity(RatFunc(Poly(1), n * n - n), 4);
  CHECK(lead == 2);
  REQUIRE(cs.size() == 4);
  for (auto& c : cs) CHECK(c == 1);

  auto [lead2, cs2] = laurent_at_infinity(RatFunc(n * n * n + n, n), 3);
  CHECK(lead2 == -2);
  CHECK(cs2[0] == 1);
  CHECK(cs2[1] == 0);
  CHECK(cs2[2] == 1);

  auto [lead0, cs0] = laurent_at_infinity(RatFunc(), 2);
  CHECK(lead0 == 0);
  CHECK(cs0 == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("integer roots") {
  Poly n = Poly::var();
  auto r1 = integer_roots(n * n * n - n * n);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == std::pair<Int, int>{0, 2});
  CHECK(r1[1] == std::pair<Int, int>{1, 1});

  Poly p = n.pow(3) * (n - Poly(1)).pow(2) * (n + Poly(2));
  auto r2 = integer_roots(p);
  REQUIRE(r2.size() == 3);
  CHECK(r2[0] == std::pair<Int, int>{-2, 1});
  CHECK(r2[1] == std::pair<Int, int>{0, 3});
  CHECK(r2[2] == std::pair<Int, int>{1, 2});

  auto r3 = integer_roots(n * n + Poly(1));
  CHECK(r3.empty());

  // non-integer rational root ignored, scale-invariant
  auto r4 = integer_roots(Rat(1) / Rat(3) * ((Poly(2) * n - Poly(1)) * (n - Poly(4))));
  REQUIRE(r4.size() == 1);
  CHECK(r4[0] == std::pair<Int, int>{4, 1});
}

TEST_CASE("determinants over the polynomial ring") {
  Poly n = Poly::var();
  Mat<Poly> g(2, 2);
  g(0, 0) = n * n;
  g(0, 1) = n;
  g(1, 0) = n;
  g(1, 1) = n;
  Poly d = det_bareiss(g);
  CHECK(d == n * n * n - n * n);
  CHECK(det_modular(g) == d);
  CHECK(det_poly(g) == d);

  std::mt19937 rng(777);
  for (int trial = 0; trial < 5; trial++) {
    Mat<Poly> a = random_mat(rng, 4, 2), b = random_mat(rng, 4, 2);
    CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
  }
  for (int trial = 0; trial < 5; trial++) {
    Mat<Poly> a = random_mat(rng, 5, 3);
    CHECK(det_modular(a) == det_bareiss(a));
  }
  Mat<Poly> z(3, 3);
  CHECK(det_bareiss(z).is_zero());
  CHECK(det_modular(z).is_zero());
}

TEST_CASE("symbolic inverse") {
  Poly n = Poly::var();
  Mat<Poly> g(2, 2);
  g(0, 0) = n * n;
  g(0, 1) = n;
  g(1, 0) = n;
  g(1, 1) = n;
  Mat<RatFunc> w = invert(g);
  CHECK(w(0, 0) == RatFunc(Poly(1), n * n - n));
  CHECK(w(0, 1) == RatFunc(Poly(-1), n * n - n));
  CHECK(w(1, 0) == RatFunc(Poly(-1), n * n - n));
  CHECK(w(1, 1) == RatFunc(n, n * n - n));

  Mat<RatFunc> gf(2, 2);
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) gf(i, j) = RatFunc(g(i, j));
  CHECK(gf * w == Mat<RatFunc>::identity(2));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 3; trial++) {
    Mat<Poly> a = random_mat(rng, 3, 2);
    if (det_poly(a).is_zero()) continue;
    Mat<RatFunc> inv = invert(a);
    Mat<RatFunc> af(3, 3);
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) af(i, j) = RatFunc(a(i, j));
    CHECK(af * inv == Mat<RatFunc>::identity(3));
  }

  Mat<Poly> sing(2, 2);
  sing(0, 0) = n;
  sing(0, 1) = n;
  sing(1, 0) = n;
  sing(1, 1) = n;
  CHECK_THROWS_AS(invert(sing), std::domain_error);
}

TEST_CASE("rational matrices") {
  Mat<Rat> a(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) a(i, j) = Rat(vals[i][j]);
  CHECK(det_exact(a) == 8);
  Mat<Rat> inv = invert(a);
  CHECK(a * inv == Mat<Rat>::identity(3));

  Mat<Rat> r2(3, 3);
  int vals2[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r2(i, j) = Rat(vals2[i][j]);
  CHECK(det_exact(r2) == 0);
  CHECK_THROWS_AS(invert(r2), std::domain_error);
  CHECK(independent_rows(r2) == std::vector<int>{0, 2});

  auto sub = submatrix(r2, {0, 2}, {0, 2});
  CHECK(sub(0, 1) == 3);
  CHECK(sub(1, 0) == 1);
  CHECK(det_exact(sub) == -2);
}

TEST_CASE("modular primitives") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));
  CHECK(is_prime_u64((1ull << 61) - 1));
  CHECK(!is_prime_u64((1ull << 62) - 1));

  auto ps = det_primes(3);
  REQUIRE(ps.size() == 3);
  for (auto p : ps) {
    CHECK(is_prime_u64(p));
    CHECK(p < (1ull << 62));
    CHECK(p > (1ull << 61));
  }

  Montgomery64 mg(ps[0]);
  uint64_t a = mg.to(123456789), b = mg.to(987654321);
  CHECK(mg.from(mg.mul(a, b)) == 123456789ull * 987654321ull % ps[0]);
  CHECK(mg.from(mg.inv(a)) * 0 == 0);
  CHECK(mg.mul(a, mg.inv(a)) == mg.one());
  CHECK(mg.from(mg.pow(mg.to(3), 10)) == 59049);

  std::vector<std::vector<uint64_t>> m = {{1, 2}, {3, 4}};
  CHECK(det_mod(m, mg) == ps[0] - 2);

  // interpolate x^2 + 3 through 4 points
  std::vector<uint64_t> xs = {0, 1, 2, 3}, ys = {3, 4, 7, 12};
  auto cs = interpolate_mod(xs, ys, mg);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == 3);
  CHECK(cs[1] == 0);
  CHECK(cs[2] == 1);
  CHECK(cs[3] == 0);

  std::vector<uint64_t> rs = {ps[0] - 7, ps[1] - 7};
  CHECK(crt_symmetric(rs, {ps[0], ps[1]}) == -7);
  CHECK(crt_symmetric({5, 5}, {ps[0], ps[1]}) == 5);
}
