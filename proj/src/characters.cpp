#include "wg/characters.hpp"

#include "wg/gram.hpp"
#include "wg/integrate.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wg {

namespace {

Rat rat_pow(const Rat& base, long e) {
  Rat r = 1;
  for (long i = 0; i < e; i++) r *= base;
  return r;
}

ColorWord alternating(int k) {
  ColorWord w;
  for (int i = 0; i < k; i++) w += i % 2 ? 'x' : 'o';
  return w;
}

Rat partition_sum(const CategoryDescriptor& d, int k, const ColorWord* w, const Rat& t) {
  Rat sum = 0;
  for (const SetPartition& pi : enumerate_category(d, k, w)) sum += rat_pow(t, pi.block_count());
  return sum;
}

CategoryDescriptor law_category(const LawDescriptor& law) {
  CategoryDescriptor d;
  switch (law.family) {
    case LawFamily::Gaussian:
      d.tag = CategoryTag::P2;
      break;
    case LawFamily::ComplexGaussian:
      d.tag = CategoryTag::MatchP2;
      break;
    case LawFamily::Poisson:
      d.tag = CategoryTag::P;
      break;
    case LawFamily::Bessel:
      d.tag = CategoryTag::Ps;
      d.s = static_cast<int>(law.s);
      break;
    default:
      throw std::logic_error("family has no partition category");
  }
  return d;
}

void check_parameter(const LawDescriptor& law) {
  if (law.family == LawFamily::Semicircle || law.family == LawFamily::MarchenkoPastur) return;
  if (law.t <= 0) throw std::invalid_argument("t must be positive");
  if (law.family == LawFamily::Bessel && law.s < 1)
    throw std::invalid_argument("bessel level must be at least 1");
}

Rat trace_against_rank(const NumericWeingarten& w, long s) {
  int n = static_cast<int>(w.basis.size());
  Rat tr = 0;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      const SetPartition& pa = w.index[w.basis[a]];
      const SetPartition& pb = w.index[w.basis[b]];
      tr += w.entries(a, b) * Rat(int_pow(Int(s), pa.join(pb).block_count()));
    }
  return tr;
}

void check_rank(int N, int s) {
  if (s < 1 || s > N) throw std::invalid_argument("rank must satisfy 1 <= s <= N");
}

}  // namespace

long char_moment_limit(const CategoryDescriptor& d, int k) {
  return static_cast<long>(enumerate_category(d, k).size());
}

long char_moment_limit(const CategoryDescriptor& d, const ColorWord& w) {
  return static_cast<long>(enumerate_category(d, static_cast<int>(w.size()), &w).size());
}

Rat truncated_moment_exact(const CategoryDescriptor& d, int k, int N, int s) {
  check_rank(N, s);
  return trace_against_rank(weingarten_cached(d, k, N), s);
}

Rat truncated_moment_exact(const CategoryDescriptor& d, const ColorWord& w, int N, int s) {
  check_rank(N, s);
  return trace_against_rank(weingarten_cached(d, w, N), s);
}

Rat truncated_moment_limit(const CategoryDescriptor& d, int k, const Rat& t) {
  return partition_sum(d, k, nullptr, t);
}

Rat truncated_moment_limit(const CategoryDescriptor& d, const ColorWord& w, const Rat& t) {
  return partition_sum(d, static_cast<int>(w.size()), &w, t);
}

SignedMeasure sn_truncated_law(int N, int s) {
  check_rank(N, s);
  SignedMeasure diff({{1, 1}, {0, -1}});
  SignedMeasure power({{0, 1}});
  std::vector<std::pair<Rat, Rat>> atoms;
  for (int p = 0; p <= s; p++) {
    Rat coeff = Rat(factorial(s), factorial(N)) * Rat(factorial(N - p), factorial(s - p)) /
                Rat(factorial(p));
    for (const auto& [x, w] : power.atoms()) atoms.emplace_back(x, coeff * w);
    if (p < s) power = convolve(power, diff);
  }
  return SignedMeasure(std::move(atoms));
}

LawDescriptor LawDescriptor::parse(const std::string& name, const Rat& t, long s) {
  LawDescriptor law;
  law.t = t;
  law.s = s;
  if (name == "gaussian" || name == "g")
    law.family = LawFamily::Gaussian;
  else if (name == "complex-gaussian" || name == "G")
    law.family = LawFamily::ComplexGaussian;
  else if (name == "poisson" || name == "p")
    law.family = LawFamily::Poisson;
  else if (name == "bessel" || name == "b")
    law.family = LawFamily::Bessel;
  else if (name == "semicircle" || name == "gamma")
    law.family = LawFamily::Semicircle;
  else if (name == "marchenko-pastur" || name == "pi")
    law.family = LawFamily::MarchenkoPastur;
  else
    throw std::invalid_argument("unknown law family: " + name);
  check_parameter(law);
  return law;
}

std::string LawDescriptor::str() const {
  switch (family) {
    case LawFamily::Gaussian:
      return "gaussian(t=" + rat_str(t) + ")";
    case LawFamily::ComplexGaussian:
      return "complex-gaussian(t=" + rat_str(t) + ")";
    case LawFamily::Poisson:
      return "poisson(t=" + rat_str(t) + ")";
    case LawFamily::Bessel:
      return "bessel(level=" + std::to_string(s) + ", t=" + rat_str(t) + ")";
    case LawFamily::Semicircle:
      return "semicircle";
    case LawFamily::MarchenkoPastur:
      return "marchenko-pastur";
  }
  return "";
}

Rat law_moment(const LawDescriptor& law, int k) {
  check_parameter(law);
  switch (law.family) {
    case LawFamily::Semicircle:
      return k % 2 ? Rat(0) : Rat(catalan(k / 2));
    case LawFamily::MarchenkoPastur:
      return Rat(catalan(k));
    default:
      break;
  }
  CategoryDescriptor d = law_category(law);
  bool colored = d.needs_colors() || (d.tag == CategoryTag::Ps && d.s >= 3);
  if (!colored) return partition_sum(d, k, nullptr, law.t);
  ColorWord w = alternating(k);
  return partition_sum(d, k, &w, law.t);
}

Rat law_moment(const LawDescriptor& law, const ColorWord& w) {
  check_parameter(law);
  int k = static_cast<int>(w.size());
  switch (law.family) {
    case LawFamily::Semicircle:
      return k % 2 ? Rat(0) : Rat(catalan(k / 2));
    case LawFamily::MarchenkoPastur:
      return Rat(catalan(k));
    default:
      break;
  }
  return partition_sum(law_category(law), k, &w, law.t);
}

namespace {

// Ascending Taylor bracket lo <= exp(t) <= hi for rational t >= 0, with
// hi - lo below eps.
std::pair<Rat, Rat> exp_bracket(const Rat& t, const Rat& eps) {
  Rat term = 1, sum = 1;
  long m = 0;
  while (true) {
    m++;
    term *= t / m;
    sum += term;
    if (2 * t <= Rat(m + 1)) {
      Rat rem = 2 * term * t / (m + 1);  // geometric tail, ratio <= 1/2
      if (rem <= eps) return {sum, sum + rem};
    }
  }
}

// lo <= exp(-t) <= hi with hi - lo <= eps; uses exp(t) >= 1.
std::pair<Rat, Rat> exp_neg_bracket(const Rat& t, const Rat& eps) {
  if (t == 0) return {1, 1};
  auto [lo, hi] = exp_bracket(t, eps);
  return {1 / hi, 1 / lo};
}

// Sum of r^k x^r / r! over r = 0..R together with a bound on the dropped
// tail; R is grown until the tail bound clears eps.
struct SeriesSum {
  Rat sum;
  long window;
  Rat tail;
};

SeriesSum power_weighted_exp_series(const Rat& x, int k, const Rat& eps) {
  Rat sum = 0, w = 1;  // w = x^r / r!
  long r = 0;
  while (true) {
    sum += Rat(int_pow(Int(r), k)) * w;
    Rat next_w = w * x / (r + 1);
    Rat next_term = Rat(int_pow(Int(r + 1), k)) * next_w;
    // ratio of successive terms is at most (1+1/(r+1))^k * x/(r+2) <= 1/2
    // once r+1 >= 2k and 4x <= r+2
    if (r + 1 >= 2 * k && 4 * x <= Rat(r + 2) && 2 * next_term <= eps)
      return {sum, r, 2 * next_term};
    w = next_w;
    r++;
  }
}

// f_r(x) = sum_m x^{2m+r} / (m! (m+r)!), truncated when the geometric tail
// bound drops below eps.
std::pair<Rat, Rat> bessel_f(const Rat& x, long r, const Rat& eps) {
  Rat term = rat_pow(x, r) / Rat(factorial(r));
  Rat sum = term;
  long m = 0;
  while (true) {
    Rat next = term * x * x / Rat((m + 1) * (m + r + 1));
    if (2 * x * x <= Rat((m + 2) * (m + r + 2)) && 2 * next <= eps) return {sum, 2 * next};
    sum += next;
    term = next;
    m++;
  }
}

DensityMoment poisson_density_moment(const Rat& t, int k, const Rat& tol) {
  SeriesSum s = power_weighted_exp_series(t, k, tol / 2);
  auto [lo, hi] = exp_neg_bracket(t, s.sum == 0 ? Rat(1) : tol / (2 * s.sum));
  DensityMoment out;
  out.value = s.sum * (lo + hi) / 2;
  out.window = s.window;
  out.error_bound = s.tail + s.sum * (hi - lo) / 2;
  return out;
}

DensityMoment bessel2_density_moment(const Rat& t, int k, const Rat& tol) {
  if (k % 2 == 1) return {0, 0, 0};  // atom weights are symmetric under r -> -r
  Rat x = t / 2;
  // f_r(x) <= (x^r / r!) exp(x^2), so the outer tail over r > R is dominated
  // by the exp-series tail scaled by an upper bound on exp(x^2)
  Rat expx2 = exp_bracket(x * x, 1).second;
  SeriesSum outer = power_weighted_exp_series(x, k, tol / (8 * expx2));
  long R = outer.window;
  Rat outer_tail = 2 * expx2 * outer.tail;
  Rat inner_eps = tol / (8 * (R + 1) * Rat(int_pow(Int(R + 1), k)));
  Rat sum = 0, inner_err = 0;
  for (long r = k == 0 ? 0 : 1; r <= R; r++) {
    auto [f, ftail] = bessel_f(x, r, inner_eps);
    Rat factor = Rat(r == 0 ? 1 : 2) * Rat(int_pow(Int(r), k));
    sum += factor * f;
    inner_err += factor * ftail;
  }
  auto [lo, hi] = exp_neg_bracket(t, sum == 0 ? Rat(1) : tol / (4 * sum));
  DensityMoment out;
  out.value = sum * (lo + hi) / 2;
  out.window = R;
  out.error_bound = outer_tail + inner_err + sum * (hi - lo) / 2;
  return out;
}

}  // namespace

DensityMoment density_moment(const LawDescriptor& law, int k, const Rat& tol) {
  check_parameter(law);
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (law.family == LawFamily::Poisson || (law.family == LawFamily::Bessel && law.s == 1))
    return poisson_density_moment(law.t, k, tol);
  if (law.family == LawFamily::Bessel && law.s == 2)
    return bessel2_density_moment(law.t, k, tol);
  throw std::invalid_argument("density series available for poisson and bessel levels 1, 2");
}

TruncatedDensity truncated_density(const LawDescriptor& law, long window, const Rat& tol) {
  check_parameter(law);
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  bool poisson = law.family == LawFamily::Poisson ||
                 (law.family == LawFamily::Bessel && law.s == 1);
  bool bessel2 = law.family == LawFamily::Bessel && law.s == 2;
  if (!poisson && !bessel2)
    throw std::invalid_argument("density series available for poisson and bessel levels 1, 2");
  const Rat& t = law.t;
  TruncatedDensity out;
  out.window = window;
  std::vector<std::pair<Rat, Rat>> atoms;
  if (poisson) {
    Rat expt_hi = exp_bracket(t, 1).second;
    auto [lo, hi] = exp_neg_bracket(t, tol / (2 * expt_hi));
    Rat mid = (lo + hi) / 2;
    Rat w = 1, kept = 0;  // w = t^r / r!
    for (long r = 0; r <= window; r++) {
      atoms.emplace_back(Rat(r), mid * w);
      kept += w;
      w *= t / (r + 1);
    }
    // dropped mass: exp(-t) sum_{r>window} t^r/r! <= 2 w when the term ratio
    // has fallen below 1/2; otherwise only the trivial bound 1 applies
    Rat tail = 2 * t <= Rat(window + 2) ? 2 * w : Rat(1);
    out.error_bound = tail + kept * (hi - lo) / 2;
  } else {
    Rat x = t / 2;
    Rat expx2 = exp_bracket(x * x, 1).second;
    Rat inner_eps = tol / (4 * (2 * window + 2));
    auto [lo, hi] = exp_neg_bracket(t, tol / (4 * (2 * window + 2)));
    Rat mid = (lo + hi) / 2, kept = 0, inner_err = 0;
    for (long r = -window; r <= window; r++) {
      auto [f, ftail] = bessel_f(x, r < 0 ? -r : r, inner_eps);
      atoms.emplace_back(Rat(r), mid * f);
      kept += f;
      inner_err += ftail;
    }
    Rat w = rat_pow(x, window + 1) / Rat(factorial(window + 1));
    Rat tail = 2 * x <= Rat(window + 2) ? 4 * expx2 * w : Rat(1);
    out.error_bound = tail + inner_err + kept * (hi - lo) / 2;
  }
  out.measure = SignedMeasure(std::move(atoms));
  return out;
}

SemigroupReport semigroup_check(LawFamily family, const Rat& s, const Rat& t, long window,
                                const Rat& tol) {
  if (family != LawFamily::Poisson && family != LawFamily::Bessel)
    throw std::invalid_argument("semigroup check covers poisson and bessel");
  LawDescriptor a, b, c;
  a.family = b.family = c.family = family;
  a.s = b.s = c.s = 2;
  a.t = s;
  b.t = t;
  c.t = s + t;
  Rat part = tol / 16;
  TruncatedDensity da = truncated_density(a, window, part);
  TruncatedDensity db = truncated_density(b, window, part);
  TruncatedDensity dc = truncated_density(c, window, part);
  SemigroupReport report;
  report.window = window;
  report.tv = variation_distance(convolve(da.measure, db.measure), dc.measure);
  Rat bnorm = 0;
  for (const auto& [x, w] : db.measure.atoms()) bnorm += abs(w);
  report.slack = da.error_bound * bnorm + db.error_bound + dc.error_bound;
  report.pass = report.tv + report.slack <= tol;
  return report;
}

std::pair<Rat, Rat> su2_so3_moments(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Rat m = sphere_moment({2L * k}, 4);
  return {Rat(int_pow(Int(2), 2L * k)) * m, Rat(int_pow(Int(4), k)) * m};
}

}  // namespace wg
