#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wg/montecarlo.hpp"
#include "wg/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

using namespace wg;

namespace {

size_t count_elements(GroupFamily fam, int N, long s) {
  size_t n = 0;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  enumerate_group(fam, N, s, [&](const GroupElement& g) {
    n++;
    seen.insert({g.perm, g.phases});
  });
  REQUIRE(seen.size() == n);  // no repeats
  return n;
}

Rat rat_avg(GroupFamily fam, int N, long s, const std::string& monomial) {
  return exact_average(fam, N, s, MonomialSpec::parse(monomial)).rational_value();
}

}  // namespace

TEST_CASE("enumeration counts and budget") {
  CHECK(count_elements(GroupFamily::S, 3, 1) == 6);
  CHECK(count_elements(GroupFamily::S, 4, 1) == 24);
  CHECK(count_elements(GroupFamily::H, 2, 1) == 8);
  CHECK(count_elements(GroupFamily::H, 3, 1) == 48);
  CHECK(count_elements(GroupFamily::Hs, 2, 3) == 18);
  CHECK(group_order(GroupFamily::H, 2) == 8);
  CHECK(group_order(GroupFamily::Hs, 2, 3) == 18);
  CHECK(group_order(GroupFamily::S, 8) == 40320);

  CHECK_THROWS_AS(enumerate_group(GroupFamily::Hs, 8, 10, [](const GroupElement&) {}),
                  std::runtime_error);
  ::setenv("WG_ENUM_BUDGET", "5", 1);
  CHECK(enum_budget() == 5);
  CHECK_THROWS_AS(enumerate_group(GroupFamily::S, 3, 1, [](const GroupElement&) {}),
                  std::runtime_error);
  ::unsetenv("WG_ENUM_BUDGET");
  CHECK(enum_budget() == 10000000L);

  CHECK(parse_family("Hs") == GroupFamily::Hs);
  CHECK(family_name(GroupFamily::H) == "H");
  CHECK_THROWS_AS(parse_family("Q"), std::invalid_argument);
}

TEST_CASE("cyclotomic sums") {
  CyclotomicSum c(3, {Rat(1, 2), Rat(1, 3), Rat(1, 3)});
  CHECK(c.is_rational());
  CHECK(c.rational_value() == Rat(1, 6));
  CHECK(c.str() == "1/6");

  CyclotomicSum d(3, {Rat(0), Rat(1, 2), Rat(1, 4)});
  CHECK(!d.is_rational());
  CHECK_THROWS_AS(d.rational_value(), std::domain_error);
  CHECK(d.str() == "1/2*w + 1/4*w^2  (w = exp(2*pi*i/3))");

  CHECK(CyclotomicSum(1, {Rat(3, 4)}).rational_value() == Rat(3, 4));
  CHECK(CyclotomicSum(2, {Rat(1, 2), Rat(1, 4)}).rational_value() == Rat(1, 4));
  CHECK_THROWS_AS(CyclotomicSum(3, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("exact averages on finite groups") {
  CHECK(rat_avg(GroupFamily::S, 3, 1, "u[1,1] u[2,2]") == Rat(1, 6));
  CHECK(rat_avg(GroupFamily::S, 3, 1, "u[1,1]") == Rat(1, 3));
  CHECK(rat_avg(GroupFamily::S, 4, 1, "u[1,1] u[2,2] u[3,3]") == Rat(1, 24));
  CHECK(rat_avg(GroupFamily::S, 4, 1, "u[1,1] u[1,2]") == 0);
  CHECK(rat_avg(GroupFamily::H, 2, 1, "u[1,1]^2") == Rat(1, 2));
  CHECK(rat_avg(GroupFamily::H, 2, 1, "u[1,1]") == 0);
  CHECK(rat_avg(GroupFamily::H, 3, 1, "u[1,1]^2 u[2,2]^2") == Rat(1, 6));
  CHECK(rat_avg(GroupFamily::H, 3, 1, "u[1,1]^2") == Rat(1, 3));
  CHECK(rat_avg(GroupFamily::H, 3, 1, "u[1,1]^2 u[1,2]^2") == 0);

  // phase level 3: balanced words are rational, conjugation cancels phases
  CHECK(rat_avg(GroupFamily::Hs, 2, 3, "u[1,1] ub[1,1]") == Rat(1, 2));
  CHECK(rat_avg(GroupFamily::Hs, 2, 3, "u[1,1]^3") == Rat(1, 2));
  CHECK(exact_average(GroupFamily::Hs, 2, 3, MonomialSpec::parse("u[1,1]")).is_rational());
  CHECK(rat_avg(GroupFamily::Hs, 2, 3, "u[1,1]") == 0);
  CHECK(rat_avg(GroupFamily::Hs, 2, 3, "u[1,1]^2 ub[2,2]") == 0);
  CHECK(rat_avg(GroupFamily::Hs, 2, 3, "u[1,2] ub[1,2]") == Rat(1, 2));

  CHECK_THROWS_AS(exact_average(GroupFamily::S, 2, 1, MonomialSpec::parse("u[3,1]")),
                  std::invalid_argument);
}

TEST_CASE("permutation averages match the kernel closed form") {
  for (int k = 1; k <= 3; k++) {
    long total = 1;
    for (int t = 0; t < k; t++) total *= 3;
    auto decode = [&](long code) {
      std::vector<int> v(k);
      for (int t = 0; t < k; t++) {
        v[t] = static_cast<int>(code % 3) + 1;
        code /= 3;
      }
      return v;
    };
    for (long ci = 0; ci < total; ci++)
      for (long cj = 0; cj < total; cj++) {
        auto i = decode(ci), j = decode(cj);
        MonomialSpec m;
        for (int t = 0; t < k; t++) m.factors.push_back({i[t], j[t], 'o'});
        CHECK(exact_average(GroupFamily::S, 3, 1, m).rational_value() ==
              sn_exact_integral(i, j, 3));
      }
  }
}

TEST_CASE("fixed point laws") {
  SignedMeasure s3 = fixed_point_law(GroupFamily::S, 3, 3);
  CHECK(s3.is_probability());
  CHECK(s3.mass_at(0) == Rat(1, 3));
  CHECK(s3.mass_at(1) == Rat(1, 2));
  CHECK(s3.mass_at(2) == 0);
  CHECK(s3.mass_at(3) == Rat(1, 6));

  CHECK(fixed_point_law(GroupFamily::S, 4, 4).mass_at(0) == Rat(3, 8));
  CHECK(fixed_point_law(GroupFamily::S, 4, 2).moment(1) == Rat(1, 2));

  SignedMeasure s5 = fixed_point_law(GroupFamily::S, 5, 5);
  CHECK(s5.moment(1) == 1);
  CHECK(s5.moment(2) == 2);

  SignedMeasure h2 = fixed_point_law(GroupFamily::H, 2, 2);
  CHECK(h2.is_probability());
  for (const auto& [x, w] : h2.atoms()) {
    CHECK(x >= -2);
    CHECK(x <= 2);
  }
  CHECK(h2.mass_at(1) == h2.mass_at(-1));
  CHECK(h2.mass_at(2) == h2.mass_at(-2));
  CHECK(h2.moment(1) == 0);
  CHECK(h2.moment(2) == 1);

  // derangement mass at N = 8 equals the inclusion-exclusion alternating sum
  Rat alt = 0;
  for (int i = 0; i <= 8; i++) alt += Rat((i % 2 == 0) ? 1 : -1, factorial(i));
  CHECK(fixed_point_law(GroupFamily::S, 8, 8).mass_at(0) == alt);

  CHECK_THROWS_AS(fixed_point_law(GroupFamily::Hs, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_law(GroupFamily::S, 3, 4), std::invalid_argument);
}

TEST_CASE("signed measures") {
  SignedMeasure m({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(1, 4)}, {Rat(1), Rat(1, 4)}});
  CHECK(m.atoms().size() == 2);
  CHECK(m.atoms()[0].first == 0);
  CHECK(m.mass_at(1) == Rat(3, 4));
  CHECK(m.total_mass() == 1);
  CHECK(m.is_probability());
  CHECK(m.moment(0) == 1);
  CHECK(m.moment(2) == Rat(3, 4));

  SignedMeasure dropped({{Rat(5), Rat(0)}});
  CHECK(dropped.atoms().empty());

  SignedMeasure coin({{Rat(0), Rat(1, 2)}, {Rat(1), Rat(1, 2)}});
  SignedMeasure two = convolve(coin, coin);
  CHECK(two.mass_at(0) == Rat(1, 4));
  CHECK(two.mass_at(1) == Rat(1, 2));
  CHECK(two.mass_at(2) == Rat(1, 4));
  CHECK(variation_distance(two, two) == 0);
  CHECK(variation_distance(coin, two) == Rat(1, 4) + Rat(1, 4));

  SignedMeasure neg({{Rat(0), Rat(3, 2)}, {Rat(1), Rat(-1, 2)}});
  CHECK(neg.total_mass() == 1);
  CHECK(!neg.is_probability());
}

TEST_CASE("haar sampling") {
  for (int n : {3, 6}) {
    auto u = haar_sample('O', n, 42);
    for (size_t t = 0; t < u.size(); t++) CHECK(u[t].imag() == 0.0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        double dot = 0;
        for (int r = 0; r < n; r++) dot += u[r * n + i].real() * u[r * n + j].real();
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-12);
      }
  }
  {
    int n = 3;
    auto u = haar_sample('U', n, 42);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        std::complex<double> dot = 0;
        for (int r = 0; r < n; r++) dot += std::conj(u[r * n + i]) * u[r * n + j];
        CHECK(std::abs(dot - std::complex<double>(i == j ? 1.0 : 0.0)) <= 1e-12);
      }
  }
  CHECK(haar_sample('O', 4, 11) == haar_sample('O', 4, 11));
  CHECK(haar_sample('O', 4, 11) != haar_sample('O', 4, 12));
  CHECK_THROWS_AS(haar_sample('X', 3, 1), std::invalid_argument);

  CHECK(split_seed(1, 0) != split_seed(1, 1));
  CHECK(split_seed(1, 0) != split_seed(2, 0));
}

TEST_CASE("monte carlo sanity") {
  auto r = mc_integral('O', 3, MonomialSpec::parse("u[1,1]^2"), 20000, 7);
  CHECK(r.std_error < 0.01);
  CHECK(std::abs(r.estimate - 1.0 / 3.0) <= 4 * r.std_error);
  CHECK(r.rng == std::string("mt19937_64+marsaglia-polar"));

  auto r2 = mc_integral('U', 2, MonomialSpec::parse("u[1,1] ub[1,1]"), 20000, 7);
  CHECK(std::abs(r2.estimate - 0.5) <= 4 * r2.std_error);
  CHECK(std::abs(r2.imag_mean) <= 1e-12);  // |u11|^2 is real sample by sample

  auto r3 = mc_integral('O', 2, MonomialSpec::parse("u[1,1]^2 u[2,2]^2"), 20000, 7);
  CHECK(std::abs(r3.estimate - 3.0 / 8.0) <= 4 * r3.std_error);

  // battery shares one sample stream, so single runs reproduce entry by entry
  auto batch = mc_battery('O', 3, {MonomialSpec::parse("u[1,1]^2"), MonomialSpec::parse("u[1,2]^2")},
                          5000, 99);
  auto single = mc_integral('O', 3, MonomialSpec::parse("u[1,1]^2"), 5000, 99);
  CHECK(batch[0].estimate == single.estimate);
  CHECK(batch[0].std_error == single.std_error);

  CHECK_THROWS_AS(mc_integral('O', 3, MonomialSpec::parse("u[1,1]"), 10, 1),
                  std::invalid_argument);
}
