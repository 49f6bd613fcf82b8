#include "wg/cli.hpp"

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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wg {
namespace {

using nlohmann::ordered_json;

// Usage problems exit 2; anything thrown by the computation modules exits 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Formula {
  const char* name;
  const char* statement;
};

// Registry of the identities behind printed values; every report cites one.
constexpr Formula kFormulas[] = {
    {"category-enumeration", "canonical order: block count descending, growth string ascending"},
    {"gram-join-powers", "G(pi, sigma) = N^|pi v sigma| over the partition family"},
    {"gram-inverse", "W = G^-1, restricted to a maximal independent subfamily when singular"},
    {"weingarten-sum", "integral = sum over delta-compatible partition pairs of W entries"},
    {"mobius-inversion",
     "W(pi, sigma) = sum over tau <= pi ^ sigma of mu(tau, pi) mu(tau, sigma) / N(N-1)...(N-|tau|+1)"},
    {"lindstrom-determinant", "det G on P(k) = prod over partitions of N(N-1)...(N-|pi|+1)"},
    {"determinant-anchor", "worked low-order Gram determinants in closed form"},
    {"hook-content-product",
     "det G on P2(2k) = prod over |lambda| = k of content(lambda) ^ syt(2 lambda)"},
    {"chebyshev-meander-determinant",
     "det G on NC2(2k) as a product of Chebyshev polynomial powers"},
    {"sphere-moment", "coordinate moments on the real sphere via double-factorial ratios"},
    {"circle-average", "2x2 orthogonal moments as one cosine power average"},
    {"finite-group-average", "normalized counting measure over an exhaustively enumerated group"},
    {"gram-weingarten-trace", "k-th truncated character moment = Tr(W_kN G_ks)"},
    {"partial-fixed-point-law", "distribution of the truncated character by direct enumeration"},
    {"truncated-character-law", "(s!/N!) sum_p ((N-p)!/(s-p)!) (delta_1 - delta_0)^*p / p!"},
    {"partition-moment-sum", "k-th moment = sum over the partition family of t^|pi|"},
    {"density-series", "atomic density summed with bracketed exponentials and a proven tail bound"},
    {"semigroup-convolution", "law_s * law_t = law_(s+t) in total variation on a finite window"},
    {"catalan-number", "binom(2k, k) / (k + 1)"},
    {"path-series", "signed Brauer path counts expand W entries in powers of 1/N"},
    {"asymptotic-weingarten",
     "scaled Weingarten entries and rectangular integrals approach their limit coefficients"},
    {"integer-root-window", "integer roots of pairing Gram determinants against a stated window"},
    {"monte-carlo-mean", "sample mean and standard error over seeded Haar samples"},
};

const Formula& formula(const std::string& name) {
  for (const auto& f : kFormulas)
    if (name == f.name) return f;
  throw std::logic_error("unregistered formula: " + name);
}

std::string formula_line(const std::string& name) {
  const Formula& f = formula(name);
  return "formula: " + std::string(f.name) + " (" + f.statement + ")\n";
}

// ---- rendering ----

double to_double(const Rat& q) { return q.convert_to<double>(); }

std::string dec12(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

template <class T, class F>
ordered_json mat_json(const Mat<T>& m, F render) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); i++) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); j++) row.push_back(render(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class F>
void mat_text(std::ostream& os, const Mat<T>& m, F render) {
  for (int i = 0; i < m.rows(); i++) {
    os << "[";
    for (int j = 0; j < m.cols(); j++) os << (j ? ", " : "") << render(m(i, j));
    os << "]\n";
  }
}

ordered_json index_json(const std::vector<SetPartition>& idx) {
  ordered_json a = ordered_json::array();
  for (const auto& p : idx) a.push_back(p.str());
  return a;
}

void index_text(std::ostream& os, const std::vector<SetPartition>& idx) {
  os << "index: ";
  for (size_t i = 0; i < idx.size(); i++) os << (i ? ", " : "") << idx[i].str();
  os << "\n";
}

ordered_json base_doc(const char* command) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  return doc;
}

int emit(bool json, const ordered_json& doc, const std::ostringstream& text) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

// ---- flag resolution ----

CategoryDescriptor category_for_group(const std::string& g) {
  if (g == "S") return CategoryDescriptor::parse("P");
  if (g == "O") return CategoryDescriptor::parse("P2");
  if (g == "H") return CategoryDescriptor::parse("Peven");
  if (g == "B") return CategoryDescriptor::parse("P12");
  if (g == "U") return CategoryDescriptor::parse("mP2");
  if (g == "S+") return CategoryDescriptor::parse("NC");
  if (g == "O+") return CategoryDescriptor::parse("NC2");
  throw UsageError("unknown group '" + g + "'; use S, O, H, B, U, S+, O+ or --category");
}

CategoryDescriptor resolve_family(const std::string& group, const std::string& category) {
  if (!group.empty() && !category.empty())
    throw UsageError("give --group or --category, not both");
  if (!group.empty()) return category_for_group(group);
  if (category.empty()) throw UsageError("need --group or --category");
  try {
    return CategoryDescriptor::parse(category);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

ColorWord checked_word(const std::string& w) {
  for (char c : w)
    if (c != 'o' && c != 'x') throw UsageError("color words use 'o' and 'x' only");
  return w;
}

Rat flag_rat(const std::string& text, const char* flag) {
  try {
    return parse_rat(text);
  } catch (...) {
    throw UsageError(std::string(flag) + " expects a rational like 3/4, got '" + text + "'");
  }
}

MonomialSpec flag_monomial(const std::string& text) {
  try {
    return MonomialSpec::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

RectSpec flag_rect(const std::string& text) {
  RectSpec r;
  std::vector<long> row;
  std::string cell;
  auto flush_cell = [&] {
    if (cell.empty()) throw UsageError("--rect: empty entry");
    try {
      row.push_back(std::stol(cell));
    } catch (...) {
      throw UsageError("--rect: bad integer '" + cell + "'");
    }
    cell.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_cell();
    } else if (ch == ';') {
      flush_cell();
      r.a.push_back(row);
      row.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cell += ch;
    }
  }
  flush_cell();
  r.a.push_back(row);
  try {
    r.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return r;
}

// Word fixes k when present; color-requiring families have no uncolored index set.
int resolve_points(const CategoryDescriptor& d, const ColorWord& w, int k_flag) {
  if (!w.empty()) {
    if (k_flag >= 0 && k_flag != static_cast<int>(w.size()))
      throw UsageError("--k disagrees with --word length");
    return static_cast<int>(w.size());
  }
  if (k_flag < 0) throw UsageError("need --k or --word");
  if (d.needs_colors())
    throw UsageError("category " + d.name() + " needs --word (e.g. --word oxox)");
  return k_flag;
}

std::string family_label(const CategoryDescriptor& d, int k, const ColorWord& w) {
  return d.name() + "(" + (w.empty() ? std::to_string(k) : w) + ")";
}

Rat mc_exact(char group, int N, const MonomialSpec& m) {
  if (group == 'O') {
    MonomialSpec plain = m;
    for (auto& f : plain.factors) f.color = 'o';
    return easy_integral(CategoryDescriptor::parse("P2"), plain, N);
  }
  return easy_integral(CategoryDescriptor::parse("mP2"), m, N);
}

// ---- subcommands ----

struct FamilyOpts {
  std::string group, category, word;
  int k = -1;
};

int run_partitions(const FamilyOpts& o, bool json) {
  CategoryDescriptor d = resolve_family(o.group, o.category);
  ColorWord w = checked_word(o.word);
  int k = resolve_points(d, w, o.k);
  if (k > 12) throw UsageError("listing capped at k = 12");
  auto parts = enumerate_category(d, k, w.empty() ? nullptr : &w);

  ordered_json doc = base_doc("partitions");
  std::ostringstream text;
  doc["category"] = d.name();
  doc["k"] = k;
  if (!w.empty()) doc["word"] = w;
  doc["count"] = parts.size();
  ordered_json list = ordered_json::array();
  for (const auto& p : parts) {
    ordered_json e;
    e["partition"] = p.str();
    e["blocks"] = p.block_count();
    e["rgs"] = p.rgs();
    list.push_back(std::move(e));
  }
  doc["partitions"] = std::move(list);
  doc["formula"] = "category-enumeration";

  text << family_label(d, k, w) << ": " << parts.size() << " partitions\n";
  for (size_t i = 0; i < parts.size(); i++)
    text << std::setw(5) << (i + 1) << "  " << parts[i].str() << "\n";
  text << formula_line("category-enumeration");
  return emit(json, doc, text);
}

struct GramOpts : FamilyOpts {
  bool symbolic = false;
  long N = 0;
  bool reduced = false;
};

int run_gram(const GramOpts& o, bool json) {
  CategoryDescriptor d = resolve_family(o.group, o.category);
  ColorWord w = checked_word(o.word);
  int k = resolve_points(d, w, o.k);
  if (o.symbolic == (o.N > 0)) throw UsageError("give exactly one of --symbolic or --N");

  ordered_json doc = base_doc("gram");
  std::ostringstream text;
  doc["category"] = d.name();
  doc["k"] = k;
  if (!w.empty()) doc["word"] = w;

  if (o.symbolic) {
    SymbolicGram g = w.empty() ? gram_symbolic(d, k) : gram_symbolic(d, w);
    doc["symbolic"] = true;
    doc["index"] = index_json(g.index);
    doc["entries"] = mat_json(g.entries, [](const Poly& p) { return p.str(); });
    text << "gram matrix on " << family_label(d, k, w) << ", " << g.index.size()
         << " partitions\n";
    index_text(text, g.index);
    mat_text(text, g.entries, [](const Poly& p) { return p.str(); });
  } else {
    NumericGram g = w.empty() ? gram_numeric(d, k, o.N) : gram_numeric(d, w, o.N);
    doc["N"] = o.N;
    doc["index"] = index_json(g.index);
    doc["entries"] = mat_json(g.entries, [](const Rat& q) { return rat_str(q); });
    text << "gram matrix on " << family_label(d, k, w) << " at N = " << o.N << ", "
         << g.index.size() << " partitions\n";
    index_text(text, g.index);
    mat_text(text, g.entries, [](const Rat& q) { return rat_str(q); });
  }
  doc["formula"] = "gram-join-powers";
  text << formula_line("gram-join-powers");
  return emit(json, doc, text);
}

int run_weingarten(const GramOpts& o, bool json) {
  CategoryDescriptor d = resolve_family(o.group, o.category);
  ColorWord w = checked_word(o.word);
  int k = resolve_points(d, w, o.k);
  if (o.symbolic == (o.N > 0)) throw UsageError("give exactly one of --symbolic or --N");

  ordered_json doc = base_doc("weingarten");
  std::ostringstream text;
  doc["category"] = d.name();
  doc["k"] = k;
  if (!w.empty()) doc["word"] = w;

  if (o.symbolic) {
    SymbolicWeingarten ws = w.empty() ? weingarten_symbolic(d, k) : weingarten_symbolic(d, w);
    doc["symbolic"] = true;
    doc["index"] = index_json(ws.index);
    doc["det"] = ws.det.str();
    doc["adjugate"] = mat_json(ws.adjugate, [](const Poly& p) { return p.str(); });
    text << "weingarten matrix on " << family_label(d, k, w) << ", " << ws.index.size()
         << " partitions\n";
    index_text(text, ws.index);
    text << "det = " << ws.det.str() << "\n";
    text << "adjugate:\n";
    mat_text(text, ws.adjugate, [](const Poly& p) { return p.str(); });
    if (o.reduced) {
      Mat<RatFunc> entries = ws.entries();
      doc["entries"] = mat_json(entries, [](const RatFunc& f) { return f.str(); });
      text << "entries:\n";
      mat_text(text, entries, [](const RatFunc& f) { return f.str(); });
    }
  } else {
    NumericWeingarten wn =
        w.empty() ? weingarten_numeric(d, k, o.N) : weingarten_numeric(d, w, o.N);
    doc["N"] = o.N;
    doc["index"] = index_json(wn.index);
    ordered_json basis = ordered_json::array();
    for (int b : wn.basis) basis.push_back(b + 1);
    doc["basis"] = std::move(basis);
    doc["reduced"] = wn.reduced();
    doc["entries"] = mat_json(wn.entries, [](const Rat& q) { return rat_str(q); });
    text << "weingarten matrix on " << family_label(d, k, w) << " at N = " << o.N << ", "
         << wn.index.size() << " partitions\n";
    index_text(text, wn.index);
    if (wn.reduced()) {
      text << "basis: " << wn.basis.size() << " of " << wn.index.size() << " partitions: ";
      for (size_t i = 0; i < wn.basis.size(); i++)
        text << (i ? ", " : "") << wn.index[wn.basis[i]].str();
      text << "\n";
    } else {
      text << "basis: all " << wn.index.size() << " partitions\n";
    }
    mat_text(text, wn.entries, [](const Rat& q) { return rat_str(q); });
  }
  doc["formula"] = "gram-inverse";
  text << formula_line("gram-inverse");
  return emit(json, doc, text);
}

struct IntegrateOpts {
  std::string group, category, monomial, rect;
  long N = 0;
};

int run_integrate(const IntegrateOpts& o, bool json) {
  if (o.monomial.empty() == o.rect.empty())
    throw UsageError("give exactly one of --monomial or --rect");
  ordered_json doc = base_doc("integrate");
  std::ostringstream text;
  Rat value;

  if (!o.rect.empty()) {
    if (!o.group.empty() || !o.category.empty()) {
      CategoryDescriptor d = resolve_family(o.group, o.category);
      if (d.tag != CategoryTag::P2)
        throw UsageError("rectangular patterns integrate over the orthogonal group (P2)");
    }
    RectSpec rs = flag_rect(o.rect);
    value = rect_integral(rs, static_cast<int>(o.N));
    doc["category"] = "P2";
    doc["N"] = o.N;
    doc["pattern"] = rs.a;
  } else {
    CategoryDescriptor d = resolve_family(o.group, o.category);
    MonomialSpec m = flag_monomial(o.monomial);
    value = easy_integral(d, m, static_cast<int>(o.N));
    if (!o.group.empty()) doc["group"] = o.group;
    doc["category"] = d.name();
    doc["N"] = o.N;
    doc["monomial"] = m.str();
  }
  doc["value"] = rat_str(value);
  doc["formula"] = "weingarten-sum";
  text << rat_str(value) << "\n" << formula_line("weingarten-sum");
  return emit(json, doc, text);
}

struct CharMomentsOpts : FamilyOpts {
  long N = 0;
  long s = 0;
  std::string t;
};

int run_char_moments(const CharMomentsOpts& o, bool json) {
  CategoryDescriptor d = resolve_family(o.group, o.category);
  ColorWord w = checked_word(o.word);
  int k = resolve_points(d, w, o.k);
  if (o.N > 0 && !o.t.empty()) throw UsageError("give --N or --t, not both");
  if (o.s > 0 && o.N <= 0) throw UsageError("--s needs --N");

  ordered_json doc = base_doc("char-moments");
  std::ostringstream text;
  doc["category"] = d.name();
  doc["k"] = k;
  if (!w.empty()) doc["word"] = w;

  Rat value;
  const char* label;
  if (o.N > 0) {
    int s = o.s > 0 ? static_cast<int>(o.s) : static_cast<int>(o.N);
    value = w.empty() ? truncated_moment_exact(d, k, static_cast<int>(o.N), s)
                      : truncated_moment_exact(d, w, static_cast<int>(o.N), s);
    doc["N"] = o.N;
    doc["s"] = s;
    label = "gram-weingarten-trace";
  } else if (!o.t.empty()) {
    Rat t = flag_rat(o.t, "--t");
    value = w.empty() ? truncated_moment_limit(d, k, t) : truncated_moment_limit(d, w, t);
    doc["t"] = rat_str(t);
    label = "partition-moment-sum";
  } else {
    value = w.empty() ? Rat(char_moment_limit(d, k)) : Rat(char_moment_limit(d, w));
    doc["t"] = "1";
    label = "partition-moment-sum";
  }
  doc["value"] = rat_str(value);
  doc["formula"] = label;
  text << rat_str(value) << "\n" << formula_line(label);
  return emit(json, doc, text);
}

struct CharLawOpts {
  std::string family, t = "1", tol = "1/1000000000000";
  long N = 0;
  long s = 0;
  long window = -1;
  long moment = -1;
  bool density = false;
};

void measure_fields(ordered_json& doc, std::ostringstream& text, const SignedMeasure& m) {
  ordered_json atoms = ordered_json::array();
  ordered_json weights = ordered_json::array();
  for (const auto& [x, wt] : m.atoms()) {
    atoms.push_back(rat_str(x));
    weights.push_back(rat_str(wt));
  }
  doc["atoms"] = std::move(atoms);
  doc["weights"] = std::move(weights);
  for (const auto& [x, wt] : m.atoms())
    text << "  " << rat_str(x) << "  " << dec12(to_double(wt)) << "\n";
}

int run_char_law(const CharLawOpts& o, bool json) {
  ordered_json doc = base_doc("char-law");
  std::ostringstream text;

  if (o.family == "sn") {
    if (o.N <= 0) throw UsageError("family sn needs --N");
    int s = o.s > 0 ? static_cast<int>(o.s) : static_cast<int>(o.N);
    SignedMeasure law = sn_truncated_law(static_cast<int>(o.N), s);
    doc["family"] = "sn";
    doc["N"] = o.N;
    doc["s"] = s;
    if (o.moment >= 0) {
      Rat v = law.moment(o.moment);
      doc["moment"] = o.moment;
      doc["value"] = rat_str(v);
      text << rat_str(v) << "\n";
    } else {
      text << "law sn(N=" << o.N << ", s=" << s << "): " << law.atoms().size() << " atoms\n";
      measure_fields(doc, text, law);
    }
    doc["formula"] = "truncated-character-law";
    text << formula_line("truncated-character-law");
    return emit(json, doc, text);
  }

  Rat t = flag_rat(o.t, "--t");
  Rat tol = flag_rat(o.tol, "--tol");
  LawDescriptor law;
  try {
    law = LawDescriptor::parse(o.family, t, o.s > 0 ? o.s : 2);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  doc["family"] = law.str();

  if (o.moment >= 0 && o.density) {
    DensityMoment dm = density_moment(law, static_cast<int>(o.moment), tol);
    doc["moment"] = o.moment;
    doc["value"] = rat_str(dm.value);
    doc["window"] = dm.window;
    doc["error_bound"] = rat_str(dm.error_bound);
    doc["formula"] = "density-series";
    text << dec12(to_double(dm.value)) << "\n";
    text << "window = " << dm.window << ", error bound <= " << dec12(to_double(dm.error_bound))
         << "\n";
    text << formula_line("density-series");
  } else if (o.moment >= 0) {
    Rat v = law_moment(law, static_cast<int>(o.moment));
    doc["moment"] = o.moment;
    doc["value"] = rat_str(v);
    doc["formula"] = "partition-moment-sum";
    text << rat_str(v) << "\n" << formula_line("partition-moment-sum");
  } else if (o.window >= 0) {
    TruncatedDensity td = truncated_density(law, o.window, tol);
    doc["window"] = td.window;
    text << "law " << law.str() << " on window " << td.window << ": " << td.measure.atoms().size()
         << " atoms\n";
    measure_fields(doc, text, td.measure);
    doc["error_bound"] = rat_str(td.error_bound);
    doc["formula"] = "density-series";
    text << "error bound <= " << dec12(to_double(td.error_bound)) << "\n";
    text << formula_line("density-series");
  } else {
    throw UsageError("need --window (atom list) or --moment (single moment)");
  }
  return emit(json, doc, text);
}

struct McOpts {
  std::string group, monomial;
  long N = 0;
  long samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

int run_mc(const McOpts& o, bool json) {
  if (o.group != "O" && o.group != "U")
    throw UsageError("--group must be O or U (Haar sampling)");
  if (o.samples < 1000) throw UsageError("--samples must be at least 1000");
  MonomialSpec m = flag_monomial(o.monomial);
  char g = o.group[0];
  Rat exact = mc_exact(g, static_cast<int>(o.N), m);
  McResult r = mc_integral(g, static_cast<int>(o.N), m, o.samples, o.seed);
  double ex = to_double(exact);
  double sigmas = r.std_error > 0 ? std::fabs(r.estimate - ex) / r.std_error
                                  : (r.estimate == ex ? 0.0 : std::numeric_limits<double>::infinity());

  ordered_json doc = base_doc("mc");
  doc["group"] = o.group;
  doc["N"] = o.N;
  doc["monomial"] = m.str();
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["rng"] = r.rng;
  doc["estimate"] = r.estimate;
  doc["std_error"] = r.std_error;
  doc["imag_mean"] = r.imag_mean;
  doc["exact"] = rat_str(exact);
  doc["sigmas"] = sigmas;
  doc["formula"] = "monte-carlo-mean";

  std::ostringstream text;
  text << "mc integral over " << o.group << "(" << o.N << "), monomial " << m.str() << "\n";
  text << "samples = " << r.samples << ", seed = " << r.seed << ", rng = " << r.rng << "\n";
  text << "estimate  = " << dec12(r.estimate) << "\n";
  text << "std error = " << dec12(r.std_error) << "\n";
  text << "exact     = " << rat_str(exact) << " = " << dec12(ex) << "  [weingarten-sum]\n";
  text << "sigmas    = " << dec12(sigmas) << "\n";
  text << formula_line("monte-carlo-mean");
  return emit(json, doc, text);
}

// ---- verify suites ----

struct Check {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct Suite {
  std::string name;
  std::string formula;
  std::vector<Check> checks;

  int failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  bool pass() const { return failed() == 0; }
};

struct VerifyKnobs {
  bool full = false;
  int k = 0;       // 0 keeps the suite default
  int points = 0;  // 0 keeps the suite default
  long samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

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

Suite suite_lindstrom(const VerifyKnobs& kn) {
  int kmax = kn.k > 0 ? kn.k : 4;
  if (kmax > 5) throw UsageError("lindstrom supports k <= 5");
  const CategoryDescriptor P = CategoryDescriptor::parse("P");
  Suite s{"lindstrom", "lindstrom-determinant", {}};
  for (int k = 1; k <= kmax; k++) {
    Poly det = det_poly(gram_symbolic(P, k).entries);
    Poly prod = lindstrom_det(k);
    Check c{"k=" + std::to_string(k), det == prod, {}};
    c.facts.push_back({"det", det.str()});
    c.facts.push_back({"product", prod.str()});
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_anchors(const VerifyKnobs&) {
  const CategoryDescriptor P = CategoryDescriptor::parse("P");
  const CategoryDescriptor NC2 = CategoryDescriptor::parse("NC2");
  Poly n = Poly::var();
  Suite s{"anchors", "determinant-anchor", {}};
  auto add = [&](const char* name, const CategoryDescriptor& d, int points, const Poly& expect) {
    Poly det = det_poly(gram_symbolic(d, points).entries);
    Check c{name, det == expect, {{"det", det.str()}, {"expected", expect.str()}}};
    s.checks.push_back(std::move(c));
  };
  add("P(2)", P, 2, n * n * (n - 1));
  add("NC2(4)", NC2, 4, n * n * (n * n - 1));
  add("P(3)", P, 3, n.pow(5) * (n - 1).pow(4) * (n - 2));
  add("NC2(6)", NC2, 6, n.pow(5) * (n * n - 1).pow(4) * (n * n - 2));
  return s;
}

int resolve_pmax(const VerifyKnobs& kn, int dflt, int full, const char* suite) {
  int pmax = kn.points > 0 ? kn.points : (kn.full ? full : dflt);
  if (pmax % 2 || pmax < 2 || pmax > 8)
    throw UsageError(std::string(suite) + " wants an even --points in [2, 8]");
  return pmax;
}

Suite suite_zonal(const VerifyKnobs& kn) {
  int pmax = resolve_pmax(kn, 6, 8, "zonal");
  const CategoryDescriptor P2 = CategoryDescriptor::parse("P2");
  Suite s{"zonal", "hook-content-product", {}};
  for (int p = 2; p <= pmax; p += 2) {
    Poly hook = zonal_det_pairings(p);
    Poly det = det_poly(gram_symbolic(P2, p).entries);
    Check c{"2k=" + std::to_string(p), det == hook, {}};
    if (hook.degree() <= 12) {
      c.facts.push_back({"det", det.str()});
      c.facts.push_back({"product", hook.str()});
    } else {
      c.facts.push_back({"degree", std::to_string(hook.degree())});
    }
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_difrancesco(const VerifyKnobs& kn) {
  int pmax = resolve_pmax(kn, 6, 8, "difrancesco");
  const CategoryDescriptor NC2 = CategoryDescriptor::parse("NC2");
  Poly n = Poly::var();
  Suite s{"difrancesco", "chebyshev-meander-determinant", {}};
  // Exponent-convention calibration against the worked anchors; a slip here
  // must fail every later comparison.
  Poly a4 = n * n * (n * n - 1);
  Poly a6 = n.pow(5) * (n * n - 1).pow(4) * (n * n - 2);
  bool cal4 = difrancesco_det(2) == a4 && det_poly(gram_symbolic(NC2, 4).entries) == a4;
  bool cal6 = difrancesco_det(3) == a6 && det_poly(gram_symbolic(NC2, 6).entries) == a6;
  s.checks.push_back({"calibration-4pt", cal4, {{"anchor", a4.str()}}});
  s.checks.push_back({"calibration-6pt", cal6, {{"anchor", a6.str()}}});
  bool calibrated = cal4 && cal6;
  for (int p = 2; p <= pmax; p += 2) {
    Poly prod = difrancesco_det(p / 2);
    Poly det = det_poly(gram_symbolic(NC2, p).entries);
    Check c{"2k=" + std::to_string(p), calibrated && det == prod, {}};
    if (prod.degree() <= 12) {
      c.facts.push_back({"det", det.str()});
      c.facts.push_back({"product", prod.str()});
    } else {
      c.facts.push_back({"degree", std::to_string(prod.degree())});
    }
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_mobius(const VerifyKnobs& kn) {
  int kmax = kn.k > 0 ? kn.k : (kn.full ? 4 : 3);
  if (kmax > 4) throw UsageError("mobius supports k <= 4");
  const CategoryDescriptor P = CategoryDescriptor::parse("P");
  Suite s{"mobius", "mobius-inversion", {}};
  for (int k = 1; k <= kmax; k++) {
    Mat<RatFunc> wm = sn_weingarten_mobius(k);
    SymbolicWeingarten ws = weingarten_symbolic(P, k);
    int m = static_cast<int>(ws.index.size());
    bool ok = true;
    for (int i = 0; i < m; i++)
      for (int j = 0; j < m; j++) ok = ok && wm(i, j) == ws.entry(i, j);
    Check c{"k=" + std::to_string(k), ok, {}};
    c.facts.push_back({"entries", std::to_string(m) + "x" + std::to_string(m)});
    c.facts.push_back({"w(1,1)", ws.entry(0, 0).str()});
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_oracles(const VerifyKnobs& kn) {
  Suite s{"oracles", "finite-group-average", {}};
  struct Job {
    GroupFamily fam;
    int N;
    long level;
    const char* cat;
    int kmax;
    int top;
    const char* name;
  };
  std::vector<Job> jobs;
  if (kn.full) {
    jobs = {{GroupFamily::S, 3, 1, "P", 4, 3, "S3 k<=4"},
            {GroupFamily::S, 4, 1, "P", 4, 3, "S4 k<=4"},
            {GroupFamily::S, 5, 1, "P", 4, 3, "S5 k<=4"},
            {GroupFamily::H, 2, 1, "Peven", 4, 2, "H2 k<=4"},
            {GroupFamily::H, 3, 1, "Peven", 4, 3, "H3 k<=4"}};
  } else {
    jobs = {{GroupFamily::S, 3, 1, "P", 3, 3, "S3 k<=3"},
            {GroupFamily::H, 2, 1, "Peven", 3, 2, "H2 k<=3"}};
  }
  for (const auto& job : jobs) {
    CategoryDescriptor d = CategoryDescriptor::parse(job.cat);
    bool ok = true;
    long cases = 0;
    for (int k = 1; k <= job.kmax && ok; k++) {
      auto tuples = all_tuples(k, job.top);
      for (const auto& rows : tuples) {
        for (const auto& cols : tuples) {
          MonomialSpec m = tuple_monomial(rows, cols, "");
          CyclotomicSum av = exact_average(job.fam, job.N, job.level, m);
          ok = ok && av.is_rational() &&
               av.rational_value() == easy_integral(d, m, job.N);
          cases++;
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    s.checks.push_back({job.name, ok, {{"cases", std::to_string(cases)}}});
  }
  // Level-3 reflection group on balanced color words; rationality is part of
  // the claim.
  {
    CategoryDescriptor d = CategoryDescriptor::parse("Ps:3");
    bool ok = true;
    long cases = 0;
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
        for (const auto& rows : tuples) {
          for (const auto& cols : tuples) {
            MonomialSpec m = tuple_monomial(rows, cols, w);
            CyclotomicSum av = exact_average(GroupFamily::Hs, 2, 3, m);
            ok = ok && av.is_rational() && av.rational_value() == easy_integral(d, m, 2);
            cases++;
          }
        }
      }
    }
    s.checks.push_back({"H2^3 balanced k<=3", ok, {{"cases", std::to_string(cases)}}});
  }
  return s;
}

Suite suite_closedform(const VerifyKnobs&) {
  Suite s{"closedform", "circle-average", {}};
  {
    bool ok = true;
    long cases = 0;
    for (long a = 0; a <= 8; a++)
      for (long b = 0; a + b <= 8; b++)
        for (long c = 0; a + b + c <= 8; c++)
          for (long e = 0; a + b + c + e <= 8; e++) {
            ok = ok && rect_integral(RectSpec{{{a, b}, {c, e}}}, 2) == o2_closed_form(a, b, c, e);
            cases++;
          }
    s.checks.push_back({"2x2 patterns, total <= 8", ok, {{"cases", std::to_string(cases)}}});
  }
  {
    bool ok = true;
    long cases = 0;
    for (int N = 2; N <= 6; N++) {
      std::vector<long> a(N, 0);
      // odometer over exponent vectors with sum <= 8
      while (true) {
        long total = 0;
        for (long v : a) total += v;
        if (total <= 8) {
          ok = ok && rect_integral(RectSpec{{a}}, N) == sphere_moment(a, N);
          cases++;
        }
        int p = N - 1;
        while (p >= 0 && a[p] == 8) a[p--] = 0;
        if (p < 0) break;
        a[p]++;
      }
    }
    s.checks.push_back(
        {"single rows vs sphere, deg <= 8, N <= 6", ok, {{"cases", std::to_string(cases)}}});
  }
  return s;
}

Suite suite_characters(const VerifyKnobs& kn) {
  int nmax = kn.full ? 5 : 4;
  const CategoryDescriptor P = CategoryDescriptor::parse("P");
  Suite s{"characters", "gram-weingarten-trace", {}};
  bool ok = true;
  long cases = 0;
  for (int N = 1; N <= nmax; N++) {
    for (int rank = 1; rank <= N; rank++) {
      SignedMeasure law = sn_truncated_law(N, rank);
      SignedMeasure fp = fixed_point_law(GroupFamily::S, N, rank);
      for (int k = 0; k <= 4; k++) {
        Rat m1 = law.moment(k);
        ok = ok && m1 == truncated_moment_exact(P, k, N, rank) && m1 == fp.moment(k);
        cases++;
      }
    }
  }
  s.checks.push_back({"law = trace = enumeration, N <= " + std::to_string(nmax), ok,
                      {{"cases", std::to_string(cases)}}});
  {
    SignedMeasure law8 = sn_truncated_law(8, 8);
    Rat alt = 0;
    for (long j = 0; j <= 8; j++) {
      Rat term(1, factorial(j));
      alt += (j % 2) ? -term : term;
    }
    Rat mass0 = law8.mass_at(0);
    s.checks.push_back({"derangement mass at N=8",
                        mass0 == alt,
                        {{"P(chi=0)", rat_str(mass0)}, {"alternating sum", rat_str(alt)}}});
  }
  return s;
}

Suite suite_laws(const VerifyKnobs&) {
  Suite s{"laws", "partition-moment-sum", {}};
  Rat tol = parse_rat("1/1000000000000");
  Rat budget = parse_rat("1/1000000000");
  auto gap_ok = [&](const LawDescriptor& law, int k) {
    Rat lm = law_moment(law, k);
    DensityMoment dm = density_moment(law, k, tol);
    Rat gap = lm - dm.value;
    if (gap < 0) gap = -gap;
    return gap <= budget && dm.error_bound <= budget;
  };
  {
    bool ok = true;
    for (Rat t : {Rat(1, 2), Rat(1), Rat(2)})
      for (int k = 0; k <= 6; k++) ok = ok && gap_ok(LawDescriptor{LawFamily::Poisson, t, 1}, k);
    s.checks.push_back({"poisson moments vs density, k <= 6", ok, {{"bound", "1e-9"}}});
  }
  {
    bool ok = true;
    for (Rat t : {Rat(1, 2), Rat(1)})
      for (int k = 0; k <= 6; k++) ok = ok && gap_ok(LawDescriptor{LawFamily::Bessel, t, 2}, k);
    s.checks.push_back({"bessel level 2 moments vs density, k <= 6", ok, {{"bound", "1e-9"}}});
  }
  {
    Rat sg_tol = parse_rat("1/1000000000");
    SemigroupReport p = semigroup_check(LawFamily::Poisson, Rat(1, 2), Rat(1, 2), 40, sg_tol);
    SemigroupReport b = semigroup_check(LawFamily::Bessel, Rat(1, 2), Rat(1, 2), 40, sg_tol);
    s.checks.push_back({"poisson semigroup on window 40",
                        p.pass,
                        {{"tv+slack", dec12(to_double(p.tv + p.slack))}}});
    s.checks.push_back({"bessel semigroup on window 40",
                        b.pass,
                        {{"tv+slack", dec12(to_double(b.tv + b.slack))}}});
  }
  {
    bool ok = true;
    for (int k = 0; k <= 8; k++) {
      auto [su2, so3] = su2_so3_moments(k);
      Rat cat(catalan(k));
      ok = ok && su2 == cat && so3 == cat;
    }
    s.checks.push_back({"su2/so3 moments are catalan, k <= 8", ok, {{"formula", "catalan-number"}}});
  }
  return s;
}

Suite suite_trends(const VerifyKnobs&) {
  Suite s{"trends", "asymptotic-weingarten", {}};
  std::vector<long> Ns{10, 20, 40};
  for (const char* name : {"P", "P2", "Peven"}) {
    CategoryDescriptor d = CategoryDescriptor::parse(name);
    AsymptoticReport rep = asymptotic_checks(d, 4, Ns);
    Check c{std::string("scaled entries ") + name + "(4)", rep.pass, {}};
    c.facts.push_back({"diag gap at N=40", dec12(to_double(rep.max_diag_gap.back()))});
    c.facts.push_back({"offdiag at N=40", dec12(to_double(rep.max_offdiag.back()))});
    s.checks.push_back(std::move(c));

    Rat lim = truncated_moment_limit(d, 4, Rat(1, 2));
    Rat C = 0, prev = -1;
    bool ok = true;
    Rat last = 0;
    for (long N : Ns) {
      Rat g = truncated_moment_exact(d, 4, static_cast<int>(N), static_cast<int>(N / 2)) - lim;
      if (g < 0) g = -g;
      if (prev >= 0 && g > prev) ok = false;
      prev = g;
      if (C == 0) C = Rat(N) * g;
      if (g > C / N) ok = false;
      last = g;
    }
    Check tc{std::string("trace ladder ") + name + "(4), t=1/2", ok, {}};
    tc.facts.push_back({"final gap", dec12(to_double(last))});
    tc.facts.push_back({"C/N at N=40", dec12(to_double(C / 40))});
    s.checks.push_back(std::move(tc));
  }
  struct Pat {
    const char* name;
    RectSpec rs;
  };
  // The factor 2 in the fitted constant absorbs curvature in the subleading
  // term; the first ladder point alone underestimates 1/N constants of the
  // form c*N/(N+a).
  for (const auto& pat : {Pat{"[[2,0],[0,2]]", RectSpec{{{2, 0}, {0, 2}}}},
                          Pat{"[[4]]", RectSpec{{{4}}}}, Pat{"[[2,2]]", RectSpec{{{2, 2}}}}}) {
    auto [order, coeff] = leading_order_I(pat.rs);
    Rat C = 0, prev = -1;
    bool ok = true;
    Rat last = 0;
    for (long N : Ns) {
      Rat scale(int_pow(Int(N), order));
      Rat g = scale * rect_integral(pat.rs, static_cast<int>(N)) - coeff;
      if (g < 0) g = -g;
      if (prev >= 0 && g > prev) ok = false;
      prev = g;
      if (C == 0) C = Rat(2 * N) * g;
      if (g > C / N) ok = false;
      last = g;
    }
    Check c{std::string("rect ladder ") + pat.name, ok, {}};
    c.facts.push_back({"limit coefficient", rat_str(coeff)});
    c.facts.push_back({"final gap", dec12(to_double(last))});
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_paths(const VerifyKnobs& kn) {
  const CategoryDescriptor P2 = CategoryDescriptor::parse("P2");
  Suite s{"paths", "path-series", {}};
  std::vector<int> point_list = kn.full ? std::vector<int>{4, 6} : std::vector<int>{4};
  for (int points : point_list) {
    int k = points / 2;
    SymbolicWeingarten w = weingarten_symbolic(P2, points);
    int m = static_cast<int>(w.index.size());
    bool ok = true;
    for (int i = 0; i < m; i++)
      for (int j = 0; j < m; j++) {
        int dist = brauer_distance(w.index[i], w.index[j]);
        auto hs = path_series(w.index[i], w.index[j], 8);
        auto [lead, cs] = laurent_at_infinity(w.adjugate(i, j), w.det, 9);
        ok = ok && lead == k + dist && hs[dist] != 0;
        for (int dd = 0; dd <= 8; dd++) {
          Rat c = (k + dd >= lead) ? cs[k + dd - lead] : Rat(0);
          ok = ok && c == Rat(hs[dd]);
        }
      }
    Check c{"P2(" + std::to_string(points) + ") through N^-(k+8)", ok, {}};
    c.facts.push_back({"entries", std::to_string(m) + "x" + std::to_string(m)});
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_mc(const VerifyKnobs& kn) {
  if (kn.samples < 1000) throw UsageError("--samples must be at least 1000");
  Suite s{"mc", "monte-carlo-mean", {}};
  auto battery = regression_battery();
  size_t i = 0;
  int stream = 0;
  while (i < battery.size()) {
    size_t j = i;
    std::vector<MonomialSpec> ms;
    while (j < battery.size() && battery[j].group == battery[i].group &&
           battery[j].N == battery[i].N)
      ms.push_back(battery[j++].m);
    auto res = mc_battery(battery[i].group, battery[i].N, ms, kn.samples,
                          split_seed(kn.seed, stream++));
    for (size_t q = 0; q < ms.size(); q++) {
      Rat exact = mc_exact(battery[i].group, battery[i].N, ms[q]);
      double ex = to_double(exact);
      const McResult& r = res[q];
      bool pass = r.std_error > 0 ? std::fabs(r.estimate - ex) <= 4 * r.std_error
                                  : r.estimate == ex;
      Check c{std::string(1, battery[i].group) + std::to_string(battery[i].N) + " " + ms[q].str(),
              pass,
              {}};
      c.facts.push_back({"estimate", dec12(r.estimate)});
      c.facts.push_back({"exact", rat_str(exact)});
      c.facts.push_back(
          {"sigmas", dec12(r.std_error > 0 ? std::fabs(r.estimate - ex) / r.std_error : 0)});
      s.checks.push_back(std::move(c));
    }
    i = j;
  }
  return s;
}

Suite suite_poles(const VerifyKnobs& kn) {
  int pmax = resolve_pmax(kn, 8, 8, "poles");
  Suite s{"poles", "integer-root-window", {}};
  for (int p = 2; p <= pmax; p += 2) {
    int k = p / 2;
    auto roots = integer_roots(zonal_det_pairings(p));
    std::set<Int> content_roots;
    for (const auto& lam : diagrams_of_size(k))
      for (size_t r = 0; r < lam.rows.size(); r++)
        for (long jj = 1; jj <= lam.rows[r]; jj++)
          content_roots.insert(Int(static_cast<long>(r) + 2 - 2 * jj));
    std::ostringstream all, outside;
    bool form_ok = true;
    bool contained = true;
    for (const auto& [root, mult] : roots) {
      all << (all.tellp() > 0 ? ", " : "") << root << " x" << mult;
      form_ok = form_ok && content_roots.count(root) > 0;
      if (root < -(k - 1) || root > 2 * k) {
        contained = false;
        outside << (outside.tellp() > 0 ? ", " : "") << root;
      }
    }
    Check c{"2k=" + std::to_string(p), contained, {}};
    c.facts.push_back({"window", "[" + std::to_string(-(k - 1)) + ", " + std::to_string(2 * k) + "]"});
    c.facts.push_back({"roots", all.str()});
    if (!contained) c.facts.push_back({"outside window", outside.str()});
    c.facts.push_back(
        {"content form i+1-2j", form_ok ? "all roots realized by a diagram cell" : "mismatch"});
    s.checks.push_back(std::move(c));
  }
  return s;
}

using SuiteFn = Suite (*)(const VerifyKnobs&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  bool in_all;
};

// poles stays out of the aggregate: its literal window is a diagnostic gate
// that flags the real root excursions below -(k-1); run it by name.
constexpr SuiteEntry kSuites[] = {
    {"lindstrom", suite_lindstrom, true},
    {"anchors", suite_anchors, true},
    {"zonal", suite_zonal, true},
    {"difrancesco", suite_difrancesco, true},
    {"mobius", suite_mobius, true},
    {"oracles", suite_oracles, true},
    {"closedform", suite_closedform, true},
    {"characters", suite_characters, true},
    {"laws", suite_laws, true},
    {"trends", suite_trends, true},
    {"paths", suite_paths, true},
    {"mc", suite_mc, true},
    {"poles", suite_poles, false},
};

struct VerifyOpts {
  std::string suite;
  VerifyKnobs knobs;
};

int run_verify(const VerifyOpts& o, bool json) {
  std::vector<const SuiteEntry*> chosen;
  if (o.suite == "all") {
    for (const auto& e : kSuites)
      if (e.in_all) chosen.push_back(&e);
  } else {
    for (const auto& e : kSuites)
      if (o.suite == e.name) chosen.push_back(&e);
    if (chosen.empty()) {
      std::string names;
      for (const auto& e : kSuites) names += std::string(names.empty() ? "" : ", ") + e.name;
      throw UsageError("unknown suite '" + o.suite + "'; choose one of " + names + ", or all");
    }
  }

  std::vector<Suite> results;
  for (const auto* e : chosen) results.push_back(e->fn(o.knobs));
  bool all_pass = true;
  int total_checks = 0, total_failed = 0;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    total_checks += static_cast<int>(r.checks.size());
    total_failed += r.failed();
  }

  ordered_json doc = base_doc("verify");
  std::ostringstream text;
  ordered_json suites = ordered_json::array();
  for (const auto& r : results) {
    ordered_json js;
    js["name"] = r.name;
    js["formula"] = r.formula;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      ordered_json facts;
      for (const auto& [key, value] : c.facts) facts[key] = value;
      jc["facts"] = std::move(facts);
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    js["pass"] = r.pass();
    suites.push_back(std::move(js));

    text << "suite " << r.name << "  [" << r.formula << "]\n";
    for (const auto& c : r.checks) {
      text << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
      for (const auto& [key, value] : c.facts) text << "      " << key << " = " << value << "\n";
    }
    text << "suite " << r.name << ": " << (r.checks.size() - r.failed()) << "/" << r.checks.size()
         << " passed\n\n";
  }
  doc["suites"] = std::move(suites);
  doc["pass"] = all_pass;
  text << "overall: " << (all_pass ? "PASS" : "FAIL") << " (" << (total_checks - total_failed)
       << "/" << total_checks << " checks)\n";
  emit(json, doc, text);
  return all_pass ? 0 : 1;
}

constexpr const char* kFooter = R"(Monomial grammar: whitespace-separated factors u[i,j], ub[i,j], each with an
optional exponent ^e; ub marks a conjugated entry (color 'x'); indices are
1-based. Example: "u[1,1]^2 u[2,2]^2".
Color words use 'o' (plain) and 'x' (conjugate), e.g. --word oxox.
Groups map to partition families: S -> P, O -> P2, H -> Peven, B -> P12,
U -> mP2 (colored), S+ -> NC, O+ -> NC2; reflection groups of level s via
--category Ps:s.
JSON mode ("schema": 1) renders every rational as a string "p/q"; decimal
renderings appear only in text mode, rounded to 12 significant digits.
WG_ENUM_BUDGET overrides the finite-group enumeration cap (default 10000000).
Monte Carlo commands without --seed use the fixed default seed 20240915.
Exit codes: 0 success, 1 computation error or failed verification, 2 usage error.)";

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"wg: exact Weingarten calculus over easy compact groups"};
  app.require_subcommand(1);
  app.footer(kFooter);

  bool json = false;
  int threads = 1;
  app.add_flag("--json", json, "emit a JSON document (schema 1) instead of text");
  app.add_option("--threads", threads,
                 "cap on worker threads; the computations in this build are single-threaded")
      ->check(CLI::PositiveNumber);

  FamilyOpts popts;
  auto* sub_partitions =
      app.add_subcommand("partitions", "list a partition family in canonical order");
  sub_partitions->fallthrough();
  sub_partitions->add_option("--group", popts.group, "group label (S, O, H, B, U, S+, O+)");
  sub_partitions->add_option("--category", popts.category,
                             "partition family (P, P2, P12, Peven, Ps:s, NC, NC2, mP2, mP12, mPeven)");
  sub_partitions->add_option("--k", popts.k, "number of points");
  sub_partitions->add_option("--word", popts.word, "color word over the points");

  GramOpts gopts;
  auto* sub_gram = app.add_subcommand("gram", "Gram matrix of partition vectors");
  sub_gram->fallthrough();
  sub_gram->add_option("--group", gopts.group, "group label (S, O, H, B, U, S+, O+)");
  sub_gram->add_option("--category", gopts.category, "partition family");
  sub_gram->add_option("--k", gopts.k, "number of points");
  sub_gram->add_option("--word", gopts.word, "color word over the points");
  sub_gram->add_flag("--symbolic", gopts.symbolic, "entries as polynomials in N");
  sub_gram->add_option("--N", gopts.N, "evaluate at this matrix size");

  GramOpts wopts;
  auto* sub_weingarten =
      app.add_subcommand("weingarten", "Weingarten matrix (inverse Gram) of a family");
  sub_weingarten->fallthrough();
  sub_weingarten->add_option("--group", wopts.group, "group label (S, O, H, B, U, S+, O+)");
  sub_weingarten->add_option("--category", wopts.category, "partition family");
  sub_weingarten->add_option("--k", wopts.k, "number of points");
  sub_weingarten->add_option("--word", wopts.word, "color word over the points");
  sub_weingarten->add_flag("--symbolic", wopts.symbolic, "adjugate and determinant in N");
  sub_weingarten->add_option("--N", wopts.N, "evaluate at this matrix size");
  sub_weingarten->add_flag("--reduced", wopts.reduced,
                           "with --symbolic, also print fully reduced rational-function entries");

  IntegrateOpts iopts;
  auto* sub_integrate =
      app.add_subcommand("integrate", "Haar-measure integral of a monomial in matrix entries");
  sub_integrate->fallthrough();
  sub_integrate->add_option("--group", iopts.group, "group label (S, O, H, B, U, S+, O+)");
  sub_integrate->add_option("--category", iopts.category, "partition family");
  sub_integrate->add_option("--N", iopts.N, "matrix size")->required()->check(CLI::PositiveNumber);
  sub_integrate->add_option("--monomial", iopts.monomial, "monomial, e.g. \"u[1,1]^2 u[2,2]^2\"");
  sub_integrate->add_option("--rect", iopts.rect,
                            "orthogonal exponent pattern, rows by ';', e.g. \"2,0;0,2\"");

  auto* sub_char = app.add_subcommand("char", "truncated character moments and limit laws");
  sub_char->require_subcommand(1);
  sub_char->fallthrough();

  CharMomentsOpts cmopts;
  auto* sub_char_moments =
      sub_char->add_subcommand("moments", "moments of the truncated character chi_s");
  sub_char_moments->fallthrough();
  sub_char_moments->add_option("--group", cmopts.group, "group label (S, O, H, B, U, S+, O+)");
  sub_char_moments->add_option("--category", cmopts.category, "partition family");
  sub_char_moments->add_option("--k", cmopts.k, "moment order");
  sub_char_moments->add_option("--word", cmopts.word, "color word (conjugation pattern)");
  sub_char_moments->add_option("--N", cmopts.N, "matrix size; omit for the limit moment")
      ->check(CLI::PositiveNumber);
  sub_char_moments->add_option("--s", cmopts.s, "truncation rank (default N)")
      ->check(CLI::PositiveNumber);
  sub_char_moments->add_option("--t", cmopts.t, "limit ratio s/N as a rational (no --N)");

  CharLawOpts clopts;
  auto* sub_char_law = sub_char->add_subcommand("law", "limit laws and exact truncated laws");
  sub_char_law->fallthrough();
  sub_char_law->add_option("--family", clopts.family,
                           "sn, gaussian, complex-gaussian, poisson, bessel, semicircle, "
                           "marchenko-pastur")
      ->required();
  sub_char_law->add_option("--t", clopts.t, "intensity parameter (rational, default 1)");
  sub_char_law->add_option("--s", clopts.s,
                           "rank for family sn (default N); level for family bessel (default 2)")
      ->check(CLI::PositiveNumber);
  sub_char_law->add_option("--N", clopts.N, "group size for family sn")->check(CLI::PositiveNumber);
  sub_char_law->add_option("--window", clopts.window, "atom window: positions with |x| <= window")
      ->check(CLI::NonNegativeNumber);
  sub_char_law->add_option("--moment", clopts.moment, "print the k-th moment instead of atoms")
      ->check(CLI::NonNegativeNumber);
  sub_char_law->add_flag("--density", clopts.density,
                         "with --moment, evaluate the density series with a proven error bound");
  sub_char_law->add_option("--tol", clopts.tol,
                           "rational tolerance for density series (default 1/10^12)");

  VerifyOpts vopts;
  auto* sub_verify = app.add_subcommand("verify", "run identity and oracle suites");
  sub_verify->fallthrough();
  sub_verify
      ->add_option("--suite", vopts.suite,
                   "lindstrom | anchors | zonal | difrancesco | mobius | oracles | closedform | "
                   "characters | laws | trends | paths | mc | poles | all (all skips the poles "
                   "window diagnostic; run it by name)")
      ->required();
  sub_verify->add_flag("--full", vopts.knobs.full, "acceptance-size ranges instead of quick ones");
  sub_verify->add_option("--k", vopts.knobs.k, "override the largest k where applicable");
  sub_verify->add_option("--points", vopts.knobs.points,
                         "override the largest point count (even) where applicable");
  sub_verify->add_option("--samples", vopts.knobs.samples, "samples per Monte Carlo stream");
  sub_verify->add_option("--seed", vopts.knobs.seed, "RNG seed (default 20240915)");

  McOpts mopts;
  auto* sub_mc = app.add_subcommand("mc", "Monte Carlo estimate of a Haar integral");
  sub_mc->fallthrough();
  sub_mc->add_option("--group", mopts.group, "O or U")->required();
  sub_mc->add_option("--N", mopts.N, "matrix size")->required()->check(CLI::PositiveNumber);
  sub_mc->add_option("--monomial", mopts.monomial, "monomial to average")->required();
  sub_mc->add_option("--samples", mopts.samples, "sample count, at least 1000 (default 100000)");
  sub_mc->add_option("--seed", mopts.seed, "RNG seed (default 20240915)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  (void)threads;

  try {
    if (*sub_partitions) return run_partitions(popts, json);
    if (*sub_gram) return run_gram(gopts, json);
    if (*sub_weingarten) return run_weingarten(wopts, json);
    if (*sub_integrate) return run_integrate(iopts, json);
    if (*sub_char) {
      if (*sub_char_moments) return run_char_moments(cmopts, json);
      if (*sub_char_law) return run_char_law(clopts, json);
    }
    if (*sub_verify) return run_verify(vopts, json);
    if (*sub_mc) return run_mc(mopts, json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace wg
