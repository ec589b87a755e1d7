#pragma once

// Deterministic text output. Every data file the tools emit goes through
// these helpers so that identical inputs produce byte-identical files:
// fixed "%g" style formatting, tab separation, terms written in the
// canonical graded ordering of Series.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "halo/params.hpp"
#include "halo/reference.hpp"
#include "halo/series.hpp"

namespace halo {

// Fixed-precision formatting for plot-oriented data files.
inline std::string format_g(double v, int prec = 12) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return std::string(buf);
}

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_shortest(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Tab-separated table with a commented header line.
class TableWriter {
 public:
  TableWriter(std::ostream& out, const std::vector<std::string>& columns,
              int precision = 12)
      : out_(out), precision_(precision) {
    out_ << "#";
    for (const auto& c : columns) out_ << " " << c;
    out_ << "\n";
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ << "\t";
      out_ << format_g(v, precision_);
      first = false;
    }
    out_ << "\n";
  }

 private:
  std::ostream& out_;
  int precision_;
};

// One term per line: the NV exponents, then the coefficient (real part
// and, for complex series, the imaginary part). Terms appear in the
// series' own graded-lexicographic order, so output is reproducible, and
// coefficients are written with exact round-trip precision.
template <int NV>
inline void write_series(std::ostream& out, const Series<NV, double>& s) {
  for (const auto& t : s.terms()) {
    for (int i = 0; i < NV; ++i)
      out << int(t.k[static_cast<std::size_t>(i)]) << "\t";
    out << format_shortest(t.c) << "\n";
  }
}

template <int NV>
inline void write_series(std::ostream& out,
                         const Series<NV, std::complex<double>>& s) {
  for (const auto& t : s.terms()) {
    for (int i = 0; i < NV; ++i)
      out << int(t.k[static_cast<std::size_t>(i)]) << "\t";
    out << format_shortest(t.c.real()) << "\t" << format_shortest(t.c.imag())
        << "\n";
  }
}

template <int NV>
inline Series<NV, double> read_series(std::istream& in) {
  Series<NV, double> s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::array<std::uint8_t, static_cast<std::size_t>(NV)> k{};
    double c = 0.0;
    std::istringstream ls(line);
    for (int i = 0; i < NV; ++i) {
      int e;
      if (!(ls >> e)) throw DomainError("malformed series line: " + line);
      k[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    if (!(ls >> c)) throw DomainError("malformed series line: " + line);
    s.add_term(k, c);
  }
  return s;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file: " + path);
  return out;
}

// Canonical text of data/systems.tsv, generated from the builtin table.
inline std::string systems_table_text() {
  std::ostringstream out;
  out << "# Benchmark system parameters. A = J2 * (r_e / d)^2 in the unit\n"
         "# length of each system; beta is the default sail performance.\n"
         "name\tmu\tJ2\tA\tbeta\n";
  for (const auto& r : builtin_systems()) {
    out << r.name << "\t" << format_shortest(r.mu) << "\t"
        << format_shortest(r.J2) << "\t" << format_shortest(r.A) << "\t"
        << format_shortest(r.beta) << "\n";
  }
  return out.str();
}

// Canonical text of data/reference_values.tsv, generated from the
// embedded reference blocks so file and header cannot drift apart.
inline std::string reference_values_text() {
  namespace ref = halo::reference;
  std::ostringstream out;
  out << "# Reference values for the benchmark systems, one cell per line.\n"
         "# Tolerances: equilibrium-locations " +
             format_shortest(ref::equilibrium_tol_abs) +
             " abs; linear-quantities " + format_shortest(ref::linear_tol_rel) +
             " rel;\n"
         "# resonant-coefficients " +
             format_shortest(ref::resonant_tol_rel) +
             " rel; bifurcation-energies " +
             format_shortest(ref::bifurcation_anal_tol_abs) + " abs (anal), " +
             format_shortest(ref::bifurcation_num_tol_abs) +
             " abs (num);\n"
         "# cm-coefficients " +
             format_shortest(ref::cm_tol_rel) + " rel above " +
             format_shortest(ref::cm_abs_cutoff) + ", else " +
             format_shortest(ref::cm_tol_abs) + " abs.\n";
  out << "block\trow\tquantity\tvalue\n";
  auto cell = [&](const char* block, const std::string& row,
                  const std::string& quantity, double value) {
    out << block << "\t" << row << "\t" << quantity << "\t"
        << format_shortest(value) << "\n";
  };
  for (const auto& r : ref::equilibrium_locations) {
    cell("equilibrium-locations", r.system, "L1", r.L1);
    cell("equilibrium-locations", r.system, "L2", r.L2);
    cell("equilibrium-locations", r.system, "L3", r.L3);
  }
  for (const auto& r : ref::linear_rows) {
    cell("linear-quantities", r.system, "gamma1", r.gamma1);
    cell("linear-quantities", r.system, "abscissa", r.abscissa);
    cell("linear-quantities", r.system, "a", r.a);
    cell("linear-quantities", r.system, "b", r.b);
    cell("linear-quantities", r.system, "c", r.c);
    cell("linear-quantities", r.system, "lambda1", r.lam1);
    cell("linear-quantities", r.system, "omega1", r.om1);
    cell("linear-quantities", r.system, "omega2", r.om2);
    cell("linear-quantities", r.system, "s1", r.s1);
    cell("linear-quantities", r.system, "s2", r.s2);
  }
  for (const auto& r : ref::resonant_rows) {
    cell("resonant-coefficients", r.label, "a20", r.a20);
    cell("resonant-coefficients", r.label, "a02", r.a02);
    cell("resonant-coefficients", r.label, "a11", r.a11);
    cell("resonant-coefficients", r.label, "b11", r.b11);
  }
  for (const auto& r : ref::bifurcation_rows) {
    cell("bifurcation-energies", r.label, "L1-num", r.num[0]);
    cell("bifurcation-energies", r.label, "L1-anal", r.anal[0]);
    cell("bifurcation-energies", r.label, "L2-num", r.num[1]);
    cell("bifurcation-energies", r.label, "L2-anal", r.anal[1]);
  }
  for (const auto& r : ref::cm_rows) {
    std::string k = std::to_string(r.k1) + "," + std::to_string(r.k2) + "," +
                    std::to_string(r.k3) + "," + std::to_string(r.k4);
    cell("cm-coefficients", "sun-vesta beta=1e-2", k, r.value);
  }
  return out.str();
}

}  // namespace halo
