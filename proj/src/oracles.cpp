#include "wg/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wg {

GroupFamily parse_family(const std::string& name) {
  if (name == "S") return GroupFamily::S;
  if (name == "H") return GroupFamily::H;
  if (name == "Hs") return GroupFamily::Hs;
  throw std::invalid_argument("unknown group family: " + name);
}

std::string family_name(GroupFamily fam) {
  switch (fam) {
    case GroupFamily::S: return "S";
    case GroupFamily::H: return "H";
    case GroupFamily::Hs: return "Hs";
  }
  throw std::logic_error("unreachable");
}

CyclotomicSum::CyclotomicSum(long s, std::vector<Rat> coeff) : s_(s), coeff_(std::move(coeff)) {
  if (s_ < 1 || coeff_.size() != static_cast<size_t>(s_))
    throw std::invalid_argument("cyclotomic sum needs one coefficient per exponent 0..s-1");
}

bool CyclotomicSum::is_rational() const {
  for (long e = 2; e < s_; e++)
    if (coeff_[e] != coeff_[1]) return false;
  return true;
}

Rat CyclotomicSum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic sum is not known rational");
  return s_ > 1 ? coeff_[0] - coeff_[1] : coeff_[0];
}

std::string CyclotomicSum::str() const {
  if (is_rational()) return rat_str(rational_value());
  std::string out;
  for (long e = 0; e < s_; e++) {
    if (coeff_[e] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(coeff_[e]);
    if (e == 1) out += "*w";
    if (e > 1) out += "*w^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  return out + "  (w = exp(2*pi*i/" + std::to_string(s_) + "))";
}

long enum_budget() {
  if (const char* e = std::getenv("WG_ENUM_BUDGET")) {
    long v = std::atol(e);
    if (v > 0) return v;
  }
  return 10000000L;
}

namespace {

long family_level(GroupFamily fam, long s) {
  switch (fam) {
    case GroupFamily::S: return 1;
    case GroupFamily::H: return 2;
    case GroupFamily::Hs:
      if (s < 1) throw std::invalid_argument("phase level s must be >= 1");
      return s;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Int group_order(GroupFamily fam, int N, long s) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  return int_pow(Int(family_level(fam, s)), N) * factorial(N);
}

void enumerate_group(GroupFamily fam, int N, long s,
                     const std::function<void(const GroupElement&)>& visit) {
  long lvl = family_level(fam, s);
  Int order = group_order(fam, N, s);
  if (order > enum_budget())
    throw std::runtime_error("enumeration budget exceeded: group order " + order.str());
  GroupElement g;
  g.perm.resize(N);
  std::iota(g.perm.begin(), g.perm.end(), 1);
  g.phases.assign(N, 0);
  do {
    std::fill(g.phases.begin(), g.phases.end(), 0);
    while (true) {
      visit(g);
      int pos = 0;
      while (pos < N && ++g.phases[pos] == lvl) g.phases[pos++] = 0;
      if (pos == N) break;
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
}

CyclotomicSum exact_average(GroupFamily fam, int N, long s, const MonomialSpec& m) {
  long lvl = family_level(fam, s);
  if (m.max_index() > N) throw std::invalid_argument("monomial index exceeds N");
  const auto rows = m.rows(), cols = m.cols();
  const ColorWord w = m.word();
  std::vector<Int> counts(lvl, Int(0));
  enumerate_group(fam, N, s, [&](const GroupElement& g) {
    long e = 0;
    for (size_t t = 0; t < rows.size(); t++) {
      int j = cols[t];
      if (g.perm[j - 1] != rows[t]) return;
      e += (w[t] == 'o') ? g.phases[j - 1] : -g.phases[j - 1];
    }
    e %= lvl;
    if (e < 0) e += lvl;
    counts[e] += 1;
  });
  Rat order(group_order(fam, N, s));
  std::vector<Rat> coeff(lvl);
  for (long e = 0; e < lvl; e++) coeff[e] = Rat(counts[e]) / order;
  return CyclotomicSum(lvl, std::move(coeff));
}

SignedMeasure fixed_point_law(GroupFamily fam, int N, int s_rank) {
  if (fam == GroupFamily::Hs)
    throw std::invalid_argument("fixed_point_law needs an integer-valued character: use S or H");
  if (s_rank < 0 || s_rank > N)
    throw std::invalid_argument("truncation rank must lie in [0, N]");
  std::map<long, Int> hist;
  enumerate_group(fam, N, 1, [&](const GroupElement& g) {
    long chi = 0;
    for (int j = 0; j < s_rank; j++)
      if (g.perm[j] == j + 1) chi += (g.phases[j] == 1) ? -1 : 1;
    hist[chi] += 1;
  });
  Rat order(group_order(fam, N, 1));
  std::vector<std::pair<Rat, Rat>> atoms;
  for (const auto& [chi, count] : hist) atoms.emplace_back(Rat(chi), Rat(count) / order);
  return SignedMeasure(std::move(atoms));
}

}  // namespace wg
