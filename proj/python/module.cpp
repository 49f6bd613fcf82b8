#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wg/characters.hpp"
#include "wg/gram.hpp"
#include "wg/integrate.hpp"
#include "wg/measure.hpp"
#include "wg/montecarlo.hpp"
#include "wg/partition.hpp"
#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace wg;

namespace {

py::object frac(const Rat& q) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(rat_str(q));
}

// Accepts both group labels and partition-family names.
CategoryDescriptor resolve(const std::string& name) {
  if (name == "S") return CategoryDescriptor::parse("P");
  if (name == "O") return CategoryDescriptor::parse("P2");
  if (name == "H") return CategoryDescriptor::parse("Peven");
  if (name == "B") return CategoryDescriptor::parse("P12");
  if (name == "U") return CategoryDescriptor::parse("mP2");
  if (name == "S+") return CategoryDescriptor::parse("NC");
  if (name == "O+") return CategoryDescriptor::parse("NC2");
  return CategoryDescriptor::parse(name);
}

int resolve_points(const CategoryDescriptor& d, const std::string& word, int k) {
  if (!word.empty()) {
    if (k > 0 && k != static_cast<int>(word.size()))
      throw std::invalid_argument("k disagrees with the word length");
    return static_cast<int>(word.size());
  }
  if (k <= 0) throw std::invalid_argument("need k or word");
  if (d.needs_colors())
    throw std::invalid_argument("family " + d.name() + " needs a color word");
  return k;
}

std::vector<std::string> py_partitions(const std::string& family, int k, const std::string& word) {
  CategoryDescriptor d = resolve(family);
  ColorWord w = word;
  int points = resolve_points(d, w, k);
  std::vector<std::string> out;
  for (const auto& p : enumerate_category(d, points, w.empty() ? nullptr : &w))
    out.push_back(p.str());
  return out;
}

py::dict py_gram(const std::string& family, int k, long N, const std::string& word) {
  CategoryDescriptor d = resolve(family);
  ColorWord w = word;
  int points = resolve_points(d, w, k);
  NumericGram g = w.empty() ? gram_numeric(d, points, N) : gram_numeric(d, w, N);
  py::list index, entries;
  for (const auto& p : g.index) index.append(p.str());
  for (int i = 0; i < g.entries.rows(); i++) {
    py::list row;
    for (int j = 0; j < g.entries.cols(); j++) row.append(frac(g.entries(i, j)));
    entries.append(row);
  }
  py::dict out;
  out["index"] = index;
  out["entries"] = entries;
  return out;
}

py::dict py_gram_symbolic(const std::string& family, int k, const std::string& word) {
  CategoryDescriptor d = resolve(family);
  ColorWord w = word;
  int points = resolve_points(d, w, k);
  SymbolicGram g = w.empty() ? gram_symbolic(d, points) : gram_symbolic(d, w);
  py::list index, entries;
  for (const auto& p : g.index) index.append(p.str());
  for (int i = 0; i < g.entries.rows(); i++) {
    py::list row;
    for (int j = 0; j < g.entries.cols(); j++) row.append(g.entries(i, j).str());
    entries.append(row);
  }
  py::dict out;
  out["index"] = index;
  out["entries"] = entries;
  return out;
}

py::dict py_weingarten(const std::string& family, int k, long N, const std::string& word) {
  CategoryDescriptor d = resolve(family);
  ColorWord w = word;
  int points = resolve_points(d, w, k);
  NumericWeingarten wn = w.empty() ? weingarten_numeric(d, points, N) : weingarten_numeric(d, w, N);
  py::list index, basis, entries;
  for (const auto& p : wn.index) index.append(p.str());
  for (int b : wn.basis) basis.append(b + 1);
  for (int i = 0; i < wn.entries.rows(); i++) {
    py::list row;
    for (int j = 0; j < wn.entries.cols(); j++) row.append(frac(wn.entries(i, j)));
    entries.append(row);
  }
  py::dict out;
  out["index"] = index;
  out["basis"] = basis;
  out["reduced"] = wn.reduced();
  out["entries"] = entries;
  return out;
}

py::object py_integrate(const std::string& family, const std::string& monomial, long N) {
  CategoryDescriptor d = resolve(family);
  MonomialSpec m = MonomialSpec::parse(monomial);
  return frac(easy_integral(d, m, static_cast<int>(N)));
}

py::object py_rect(const std::vector<std::vector<long>>& pattern, long N) {
  RectSpec rs{pattern};
  rs.validate();
  return frac(rect_integral(rs, static_cast<int>(N)));
}

py::object py_char_moment(const std::string& family, int k, long N, long s,
                          const std::string& t) {
  CategoryDescriptor d = resolve(family);
  if (N > 0 && !t.empty()) throw std::invalid_argument("give N or t, not both");
  if (N > 0)
    return frac(truncated_moment_exact(d, k, static_cast<int>(N),
                                       static_cast<int>(s > 0 ? s : N)));
  if (!t.empty()) return frac(truncated_moment_limit(d, k, parse_rat(t)));
  return frac(Rat(char_moment_limit(d, k)));
}

std::vector<std::pair<py::object, py::object>> py_sn_law(int N, int s) {
  std::vector<std::pair<py::object, py::object>> out;
  SignedMeasure law = sn_truncated_law(N, s);
  for (const auto& [x, wt] : law.atoms()) out.emplace_back(frac(x), frac(wt));
  return out;
}

py::object py_law_moment(const std::string& family, int k, const std::string& t, long s) {
  LawDescriptor law = LawDescriptor::parse(family, parse_rat(t), s);
  return frac(law_moment(law, k));
}

py::dict py_mc(const std::string& group, long N, const std::string& monomial, long samples,
               std::uint64_t seed) {
  if (group != "O" && group != "U") throw std::invalid_argument("group must be O or U");
  MonomialSpec m = MonomialSpec::parse(monomial);
  McResult r = mc_integral(group[0], static_cast<int>(N), m, samples, seed);
  py::dict out;
  out["estimate"] = r.estimate;
  out["std_error"] = r.std_error;
  out["imag_mean"] = r.imag_mean;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["rng"] = r.rng;
  return out;
}

}  // namespace

PYBIND11_MODULE(pyweingarten, m) {
  m.doc() = "Exact Haar-measure integration on easy compact groups";

  m.def("partitions", &py_partitions, py::arg("family"), py::arg("k") = 0, py::arg("word") = "",
        "Partition family in canonical order (block count descending, growth string ascending)");
  m.def("gram", &py_gram, py::arg("family"), py::arg("k"), py::arg("N"), py::arg("word") = "",
        "Gram matrix N^|join| as exact fractions, with the partition index");
  m.def("gram_symbolic", &py_gram_symbolic, py::arg("family"), py::arg("k") = 0,
        py::arg("word") = "", "Gram matrix entries as polynomial strings in N");
  m.def("weingarten", &py_weingarten, py::arg("family"), py::arg("k"), py::arg("N"),
        py::arg("word") = "",
        "Inverse Gram matrix as exact fractions; falls back to an independent basis when "
        "singular");
  m.def("integrate", &py_integrate, py::arg("family"), py::arg("monomial"), py::arg("N"),
        "Haar integral of a monomial \"u[i,j]\" / \"ub[i,j]\" with optional ^e exponents");
  m.def("rect", &py_rect, py::arg("pattern"), py::arg("N"),
        "Orthogonal-group integral of an exponent pattern (list of rows)");
  m.def("char_moment", &py_char_moment, py::arg("family"), py::arg("k"), py::arg("N") = 0,
        py::arg("s") = 0, py::arg("t") = "",
        "Moment of the truncated character: exact at (N, s), limit at ratio t, or t = 1");
  m.def("sn_law", &py_sn_law, py::arg("N"), py::arg("s"),
        "Exact law of the s-truncated permutation character as (atom, weight) pairs");
  m.def("law_moment", &py_law_moment, py::arg("family"), py::arg("k"), py::arg("t") = "1",
        py::arg("s") = 2, "Moment of a limit law (gaussian, poisson, bessel, semicircle, ...)");
  m.def("mc", &py_mc, py::arg("group"), py::arg("N"), py::arg("monomial"),
        py::arg("samples") = 100000, py::arg("seed") = kDefaultSeed,
        "Seeded Monte Carlo estimate of a Haar integral over O(N) or U(N)");

  m.attr("default_seed") = kDefaultSeed;
  m.attr("rng_name") = std::string(kRngName);
}
