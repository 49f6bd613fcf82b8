// Acceptance gate: one timed pass/fail line per criterion, nonzero exit if
// any line fails. Criterion 13 asserts a literal root window that the computed
// determinants genuinely violate; it reports the excursions and the observed
// root structure instead of widening the window.
#include "wg/brauer.hpp"
#include "wg/characters.hpp"
#include "wg/gram.hpp"
#include "wg/integrate.hpp"
#include "wg/matrix.hpp"
#include "wg/measure.hpp"
#include "wg/montecarlo.hpp"
#include "wg/oracles.hpp"
#include "wg/partition.hpp"
#include "wg/poly.hpp"
#include "wg/rational.hpp"
#include "wg/young.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace wg;

namespace {

const CategoryDescriptor P = CategoryDescriptor::parse("P");
const CategoryDescriptor P2 = CategoryDescriptor::parse("P2");
const CategoryDescriptor Peven = CategoryDescriptor::parse("Peven");
const CategoryDescriptor NC2 = CategoryDescriptor::parse("NC2");

std::vector<std::vector<int>> all_tuples(int k, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 1);
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[p] == top) cur[p--] = 1;
    if (p < 0) break;
    cur[p]++;
  }
  return out;
}

MonomialSpec tuple_monomial(const std::vector<int>& rows, const std::vector<int>& cols,
                            const ColorWord& w) {
  MonomialSpec m;
  for (size_t i = 0; i < rows.size(); i++)
    m.factors.push_back({rows[i], cols[i], w.empty() ? 'o' : w[i]});
  return m;
}

Rat abs_rat(Rat x) { return x < 0 ? Rat(-x) : x; }

bool c01_lindstrom(std::ostringstream& notes) {
  bool ok = true;
  for (int k = 1; k <= 4; k++) {
    Poly det = det_poly(gram_symbolic(P, k).entries);
    bool eq = det == lindstrom_det(k);
    if (!eq) notes << "      k=" << k << ": determinant differs from the product\n";
    ok = ok && eq;
  }
  return ok;
}

bool c02_anchors(std::ostringstream& notes) {
  Poly n = Poly::var();
  struct Anchor {
    const CategoryDescriptor& d;
    int points;
    Poly expect;
    const char* name;
  };
  const Anchor anchors[] = {
      {P, 2, n * n * (n - 1), "P(2)"},
      {NC2, 4, n * n * (n * n - 1), "NC2(4)"},
      {P, 3, n.pow(5) * (n - 1).pow(4) * (n - 2), "P(3)"},
      {NC2, 6, n.pow(5) * (n * n - 1).pow(4) * (n * n - 2), "NC2(6)"},
  };
  bool ok = true;
  for (const auto& a : anchors) {
    bool eq = det_poly(gram_symbolic(a.d, a.points).entries) == a.expect;
    if (!eq) notes << "      " << a.name << ": determinant differs from " << a.expect.str() << "\n";
    ok = ok && eq;
  }
  return ok;
}

bool c03_zonal(std::ostringstream& notes) {
  bool ok = true;
  for (int p = 2; p <= 8; p += 2) {
    bool eq = det_poly(gram_symbolic(P2, p).entries) == zonal_det_pairings(p);
    if (!eq) notes << "      2k=" << p << ": determinant differs from the content product\n";
    ok = ok && eq;
  }
  return ok;
}

bool c04_difrancesco(std::ostringstream& notes) {
  Poly n = Poly::var();
  Poly a4 = n * n * (n * n - 1);
  Poly a6 = n.pow(5) * (n * n - 1).pow(4) * (n * n - 2);
  bool cal = difrancesco_det(2) == a4 && difrancesco_det(3) == a6 &&
             det_poly(gram_symbolic(NC2, 4).entries) == a4 &&
             det_poly(gram_symbolic(NC2, 6).entries) == a6;
  if (!cal) {
    notes << "      exponent calibration against the 4- and 6-point anchors failed\n";
    return false;
  }
  bool ok = true;
  for (int p = 2; p <= 8; p += 2) {
    bool eq = det_poly(gram_symbolic(NC2, p).entries) == difrancesco_det(p / 2);
    if (!eq) notes << "      2k=" << p << ": determinant differs from the Chebyshev product\n";
    ok = ok && eq;
  }
  return ok;
}

bool c05_mobius(std::ostringstream& notes) {
  bool ok = true;
  for (int k = 1; k <= 4; k++) {
    Mat<RatFunc> mob = sn_weingarten_mobius(k);
    Mat<RatFunc> inv = invert(gram_symbolic(P, k).entries);
    bool eq = mob.rows() == inv.rows();
    for (int i = 0; eq && i < mob.rows(); i++)
      for (int j = 0; j < mob.cols(); j++) eq = eq && mob(i, j) == inv(i, j);
    if (!eq) notes << "      k=" << k << ": Mobius sum differs from the inverse gram matrix\n";
    ok = ok && eq;
  }
  return ok;
}

bool c06_oracles(std::ostringstream& notes) {
  struct Job {
    GroupFamily fam;
    int N;
    long level;
    const CategoryDescriptor& d;
    int kmax;
    int top;
    const char* name;
  };
  const Job jobs[] = {
      {GroupFamily::S, 3, 1, P, 4, 3, "S3"},   {GroupFamily::S, 4, 1, P, 4, 3, "S4"},
      {GroupFamily::S, 5, 1, P, 4, 3, "S5"},   {GroupFamily::H, 2, 1, Peven, 4, 2, "H2"},
      {GroupFamily::H, 3, 1, Peven, 4, 3, "H3"},
  };
  bool ok = true;
  long cases = 0;
  for (const auto& job : jobs) {
    for (int k = 1; k <= job.kmax; k++) {
      auto tuples = all_tuples(k, job.top);
      for (const auto& rows : tuples)
        for (const auto& cols : tuples) {
          MonomialSpec m = tuple_monomial(rows, cols, "");
          CyclotomicSum av = exact_average(job.fam, job.N, job.level, m);
          bool eq = av.is_rational() && av.rational_value() == easy_integral(job.d, m, job.N);
          if (!eq && ok)
            notes << "      first mismatch: " << job.name << " " << m.str() << "\n";
          ok = ok && eq;
          cases++;
        }
    }
  }
  CategoryDescriptor ps3 = CategoryDescriptor::parse("Ps:3");
  for (int k = 1; k <= 3; k++) {
    for (int bits = 0; bits < (1 << k); bits++) {
      ColorWord w;
      int balance = 0;
      for (int i = 0; i < k; i++) {
        bool conj = bits & (1 << i);
        w += conj ? 'x' : 'o';
        balance += conj ? -1 : 1;
      }
      if ((balance % 3 + 3) % 3 != 0) continue;
      auto tuples = all_tuples(k, 2);
      for (const auto& rows : tuples)
        for (const auto& cols : tuples) {
          MonomialSpec m = tuple_monomial(rows, cols, w);
          CyclotomicSum av = exact_average(GroupFamily::Hs, 2, 3, m);
          bool eq = av.is_rational() && av.rational_value() == easy_integral(ps3, m, 2);
          if (!eq && ok) notes << "      first mismatch: H2^3 word " << w << " " << m.str() << "\n";
          ok = ok && eq;
          cases++;
        }
    }
  }
  notes << "      " << cases << " monomials matched across S3, S4, S5, H2, H3, H2^3\n";
  return ok;
}

bool c07_closedform(std::ostringstream& notes) {
  bool ok = true;
  long cases = 0;
  for (long a = 0; a <= 8 && ok; a++)
    for (long b = 0; a + b <= 8 && ok; b++)
      for (long c = 0; a + b + c <= 8 && ok; c++)
        for (long e = 0; a + b + c + e <= 8 && ok; e++) {
          ok = rect_integral(RectSpec{{{a, b}, {c, e}}}, 2) == o2_closed_form(a, b, c, e);
          cases++;
        }
  if (!ok) {
    notes << "      2x2 pattern mismatch against the one-angle average\n";
    return false;
  }
  for (int N = 2; N <= 6; N++) {
    std::vector<long> a(N, 0);
    while (true) {
      long total = 0;
      for (long v : a) total += v;
      if (total <= 8) {
        if (rect_integral(RectSpec{{a}}, N) != sphere_moment(a, N)) {
          notes << "      single-row mismatch at N=" << N << "\n";
          return false;
        }
        cases++;
      }
      int p = N - 1;
      while (p >= 0 && a[p] == 8) a[p--] = 0;
      if (p < 0) break;
      a[p]++;
    }
  }
  notes << "      " << cases << " patterns matched\n";
  return ok;
}

bool c08_montecarlo(std::ostringstream& notes) {
  auto battery = regression_battery();
  bool ok = true;
  double worst = 0;
  size_t i = 0;
  int stream = 0;
  while (i < battery.size()) {
    size_t j = i;
    std::vector<MonomialSpec> ms;
    while (j < battery.size() && battery[j].group == battery[i].group &&
           battery[j].N == battery[i].N)
      ms.push_back(battery[j++].m);
    auto res = mc_battery(battery[i].group, battery[i].N, ms, 1000000,
                          split_seed(kDefaultSeed, stream++));
    for (size_t q = 0; q < ms.size(); q++) {
      MonomialSpec plain = ms[q];
      if (battery[i].group == 'O')
        for (auto& f : plain.factors) f.color = 'o';
      Rat exact = easy_integral(battery[i].group == 'O' ? P2 : CategoryDescriptor::parse("mP2"),
                                plain, battery[i].N);
      double gap = std::fabs(res[q].estimate - exact.convert_to<double>());
      double sig = res[q].std_error > 0 ? gap / res[q].std_error : (gap > 0 ? 1e9 : 0.0);
      if (sig > worst) worst = sig;
      if (sig > 4.0) {
        notes << "      " << battery[i].group << battery[i].N << " " << ms[q].str() << ": " << sig
              << " sigmas\n";
        ok = false;
      }
    }
    i = j;
  }
  std::ostringstream w;
  w.precision(3);
  w << worst;
  notes << "      20 monomials at 1000000 samples, worst deviation " << w.str() << " sigmas\n";
  return ok;
}

bool c09_characters(std::ostringstream& notes) {
  bool ok = true;
  for (int N = 1; N <= 5 && ok; N++)
    for (int s = 1; s <= N && ok; s++) {
      SignedMeasure law = sn_truncated_law(N, s);
      SignedMeasure fp = fixed_point_law(GroupFamily::S, N, s);
      for (int k = 0; k <= 4 && ok; k++) {
        Rat m = law.moment(k);
        ok = m == truncated_moment_exact(P, k, N, s) && m == fp.moment(k);
        if (!ok) notes << "      mismatch at N=" << N << " s=" << s << " k=" << k << "\n";
      }
    }
  if (!ok) return false;
  SignedMeasure law8 = sn_truncated_law(8, 8);
  Rat alt = 0;
  for (long j = 0; j <= 8; j++) {
    Rat term(1, factorial(j));
    alt += (j % 2) ? -term : term;
  }
  Rat mass0 = law8.mass_at(0);
  bool der = mass0 == alt && mass0 == Rat(14833, 40320);
  if (!der) notes << "      derangement mass " << rat_str(mass0) << " != " << rat_str(alt) << "\n";
  notes << "      P(no fixed points) at N=8: " << rat_str(mass0) << "\n";
  return der;
}

bool c10_trends(std::ostringstream& notes) {
  const std::vector<long> Ns{10, 20, 40};
  bool ok = true;
  for (const CategoryDescriptor* d : {&P, &P2, &Peven}) {
    AsymptoticReport rep = asymptotic_checks(*d, 4, Ns);
    if (!rep.pass) {
      notes << "      scaled entry ladder failed for " << d->name() << "\n";
      ok = false;
    }
    Rat lim = truncated_moment_limit(*d, 4, Rat(1, 2));
    Rat C = 0, prev = -1;
    for (long N : Ns) {
      Rat g = abs_rat(truncated_moment_exact(*d, 4, static_cast<int>(N), static_cast<int>(N / 2)) -
                      lim);
      if (prev >= 0 && g > prev) {
        notes << "      trace gap not decreasing for " << d->name() << " at N=" << N << "\n";
        ok = false;
      }
      prev = g;
      if (C == 0) C = Rat(N) * g;
      if (g > C / N) {
        notes << "      trace gap above fitted C/N for " << d->name() << " at N=" << N << "\n";
        ok = false;
      }
    }
  }
  const RectSpec patterns[] = {RectSpec{{{2, 0}, {0, 2}}}, RectSpec{{{4}}}, RectSpec{{{2, 2}}}};
  for (const RectSpec& rs : patterns) {
    auto [order, coeff] = leading_order_I(rs);
    Rat C = 0, prev = -1;
    for (long N : Ns) {
      Rat g = abs_rat(Rat(int_pow(Int(N), order)) * rect_integral(rs, static_cast<int>(N)) - coeff);
      if (prev >= 0 && g > prev) {
        notes << "      rect gap not decreasing at N=" << N << "\n";
        ok = false;
      }
      prev = g;
      if (C == 0) C = Rat(2 * N) * g;
      if (g > C / N) {
        notes << "      rect gap above fitted 2*N0*g0/N at N=" << N << "\n";
        ok = false;
      }
    }
  }
  return ok;
}

bool c11_paths(std::ostringstream& notes) {
  bool ok = true;
  for (int points : {4, 6}) {
    int k = points / 2;
    SymbolicWeingarten w = weingarten_symbolic(P2, points);
    int m = static_cast<int>(w.index.size());
    for (int i = 0; i < m; i++)
      for (int j = 0; j < m; j++) {
        int dist = brauer_distance(w.index[i], w.index[j]);
        auto hs = path_series(w.index[i], w.index[j], 8);
        auto [lead, cs] = laurent_at_infinity(w.adjugate(i, j), w.det, 9);
        bool eq = lead == k + dist && hs[dist] != 0;
        for (int dd = 0; dd <= 8 && eq; dd++) {
          Rat c = (k + dd >= lead) ? cs[k + dd - lead] : Rat(0);
          eq = c == Rat(hs[dd]);
        }
        if (!eq && ok)
          notes << "      first mismatch at " << points << " points, entry (" << i + 1 << ","
                << j + 1 << ")\n";
        ok = ok && eq;
      }
  }
  return ok;
}

bool c12_laws(std::ostringstream& notes) {
  Rat tol = parse_rat("1/1000000000000");
  Rat budget = parse_rat("1/1000000000");
  bool ok = true;
  auto gap_ok = [&](const LawDescriptor& law, int k) {
    DensityMoment dm = density_moment(law, k, tol);
    return abs_rat(law_moment(law, k) - dm.value) <= budget && dm.error_bound <= budget;
  };
  for (Rat t : {Rat(1, 2), Rat(1), Rat(2)})
    for (int k = 0; k <= 6; k++)
      if (!gap_ok(LawDescriptor{LawFamily::Poisson, t, 1}, k)) {
        notes << "      poisson t=" << rat_str(t) << " k=" << k << " beyond 1e-9\n";
        ok = false;
      }
  for (Rat t : {Rat(1, 2), Rat(1)})
    for (int k = 0; k <= 6; k++)
      if (!gap_ok(LawDescriptor{LawFamily::Bessel, t, 2}, k)) {
        notes << "      bessel t=" << rat_str(t) << " k=" << k << " beyond 1e-9\n";
        ok = false;
      }
  Rat sg_tol = parse_rat("1/1000000000");
  SemigroupReport sp = semigroup_check(LawFamily::Poisson, Rat(1, 2), Rat(1, 2), 40, sg_tol);
  SemigroupReport sb = semigroup_check(LawFamily::Bessel, Rat(1, 2), Rat(1, 2), 40, sg_tol);
  if (!sp.pass || !sb.pass) {
    notes << "      semigroup total variation beyond 1e-9\n";
    ok = false;
  }
  for (int k = 0; k <= 8; k++) {
    auto [su2, so3] = su2_so3_moments(k);
    if (su2 != Rat(catalan(k)) || so3 != Rat(catalan(k))) {
      notes << "      su2/so3 moment k=" << k << " is not the Catalan number\n";
      ok = false;
    }
  }
  return ok;
}

bool c13_poles(std::ostringstream& notes) {
  bool ok = true;
  for (int p = 2; p <= 8; p += 2) {
    int k = p / 2;
    auto roots = integer_roots(zonal_det_pairings(p));
    std::set<Int> content_roots;
    for (const auto& lam : diagrams_of_size(k))
      for (size_t r = 0; r < lam.rows.size(); r++)
        for (long jj = 1; jj <= lam.rows[r]; jj++)
          content_roots.insert(Int(static_cast<long>(r) + 2 - 2 * jj));
    std::ostringstream all, outside;
    bool form_ok = true;
    for (const auto& [root, mult] : roots) {
      all << (all.tellp() > 0 ? ", " : "") << root << " x" << mult;
      form_ok = form_ok && content_roots.count(root) > 0;
      if (root < -(k - 1) || root > 2 * k)
        outside << (outside.tellp() > 0 ? ", " : "") << root;
    }
    notes << "      2k=" << p << " window [" << -(k - 1) << ", " << 2 * k << "]: roots " << all.str();
    if (outside.tellp() > 0) {
      notes << "; outside: " << outside.str();
      ok = false;
    }
    notes << "\n";
    if (!form_ok) {
      notes << "      2k=" << p << ": a root is not of the form i+1-2j\n";
      ok = false;
    }
  }
  notes << "      every root above is i+1-2j for a cell (i,j) of a diagram of size k;\n"
           "      the negative excursions are real roots of the determinants, so the\n"
           "      stated window is recorded as failed rather than widened\n";
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<bool(std::ostringstream&)> fn;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "P(k) gram determinant equals the falling-factorial product, k <= 4", 30, c01_lindstrom},
      {2, "four worked determinant anchors", 0, c02_anchors},
      {3, "pairing gram determinant equals the content product, 2k <= 8", 60, c03_zonal},
      {4, "noncrossing-pairing determinant equals the Chebyshev product, calibrated", 0,
       c04_difrancesco},
      {5, "Mobius inversion sum equals the inverse gram matrix, k <= 4", 0, c05_mobius},
      {6, "finite-group enumeration equals the partition-sum integrals", 120, c06_oracles},
      {7, "rectangular integrals match circle and sphere closed forms", 0, c07_closedform},
      {8, "Monte Carlo battery within 4 sigma at fixed seeds", 180, c08_montecarlo},
      {9, "truncated-character law, trace, and enumeration agree", 0, c09_characters},
      {10, "large-N ladders decrease and stay under fitted C/N", 0, c10_trends},
      {11, "path series matches the Laurent expansion through N^-(k+8)", 0, c11_paths},
      {12, "limit-law moments, densities, semigroup, and Catalan checks", 0, c12_laws},
      {13, "integer roots confined to [-(k-1), 2k], 2k <= 8", 0, c13_poles},
  };

  int failed = 0;
  std::printf("acceptance: 13 criteria\n");
  for (const auto& c : criteria) {
    std::ostringstream notes;
    bool pass = false;
    std::string error;
    auto t0 = std::chrono::steady_clock::now();
    try {
      pass = c.fn(notes);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && dt > c.budget_s) {
      notes << "      exceeded the " << c.budget_s << "s budget\n";
      pass = false;
    }
    std::printf("[%2d] %s  %7.2fs", c.id, pass ? "PASS" : "FAIL", dt);
    if (c.budget_s > 0)
      std::printf("  (budget %.0fs)", c.budget_s);
    std::printf("  %s\n", c.title);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (!pass || c.id == 13 || c.id == 6 || c.id == 7 || c.id == 8 || c.id == 9)
      std::fputs(notes.str().c_str(), stdout);
    if (!pass) failed++;
  }
  std::printf("acceptance: %d/13 passed\n", 13 - failed);
  return failed == 0 ? 0 : 1;
}
