#pragma once

// Model parameters for the spatial restricted three-body problem with solar
// radiation pressure (SRP) and oblateness of the smaller primary.
//
// Conventions: mass ratio mu in (0, 0.5], the SRP strength enters through
// q = 1 - beta, the oblateness through A = J2 * re^2 (normalized units).
// Synodic frame with the larger primary at (mu, 0, 0) and the smaller at
// (mu - 1, 0, 0); mean motion n with n^2 = 1 + 1.5 A.

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

struct ModelParams {
  double mu = 0.0;
  double beta = 0.0;
  double A = 0.0;

  double q() const { return 1.0 - beta; }
  double n() const { return std::sqrt(1.0 + 1.5 * A); }
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ModelParams build_params(double mu, double beta, double A) {
  if (!(mu > 0.0) || !(mu <= 0.5))
    throw DomainError("mu out of range (0, 0.5]: " + std::to_string(mu));
  if (!(beta >= 0.0) || !(beta <= 0.5))
    throw DomainError("beta out of range [0, 0.5]: " + std::to_string(beta));
  if (!(A >= 0.0) || !(A <= 1e-4))
    throw DomainError("A out of range [0, 1e-4]: " + std::to_string(A));
  return ModelParams{mu, beta, A};
}

namespace constants {
inline constexpr double sun_luminosity_W = 3.839e26;
inline constexpr double speed_of_light = 299792458.0;
inline constexpr double gravitational_constant = 6.67430e-11;
inline constexpr double sun_mass_kg = 1.9891e30;
}  // namespace constants

// Sail performance from one-plus-reflectivity Q and mass-to-area ratio B
// (kg / m^2): beta = L Q / (4 pi c G M B).
inline double sail_performance(double Q, double B) {
  if (!(Q >= 1.0) || !(Q <= 2.0))
    throw DomainError("Q out of range [1, 2]: " + std::to_string(Q));
  if (!(B > 0.0)) throw DomainError("mass-to-area ratio must be positive");
  using namespace constants;
  const double pi = 3.14159265358979323846;
  return sun_luminosity_W * Q /
         (4.0 * pi * speed_of_light * gravitational_constant * sun_mass_kg * B);
}

struct SystemRecord {
  std::string name;
  double mu = 0.0;
  double J2 = 0.0;  // informational; A is used directly
  double A = 0.0;
  double beta = 0.0;
};

// The three case studies. The sun-vesta mass ratio is kept at full precision,
// m_vesta / (m_sun + m_vesta) with m_vesta = 2.7e20 kg, m_sun = 1.9891e30 kg;
// it rounds to the commonly quoted 1.3574e-10.
inline const std::vector<SystemRecord>& builtin_systems() {
  static const std::vector<SystemRecord> table = {
      {"earth-moon", 1.2154e-2, 2.034e-4, 4.15559e-9, 0.0},
      {"sun-barycenter", 3.040423e-6, 1081e-6, 1.96782e-12, 1e-2},
      {"sun-vesta", 2.7e20 / (1.9891e30 + 2.7e20), 0.0812232, 4.54776e-14, 1e-2},
  };
  return table;
}

inline const SystemRecord& find_system(const std::vector<SystemRecord>& table,
                                       const std::string& name) {
  for (const auto& r : table)
    if (r.name == name) return r;
  throw DomainError("unknown system: " + name);
}

inline ModelParams load_case(const std::string& name, double beta_override = -1.0) {
  const SystemRecord& r = find_system(builtin_systems(), name);
  const double beta = beta_override >= 0.0 ? beta_override : r.beta;
  return build_params(r.mu, beta, r.A);
}

// Parse a delimited system table (header line, then one record per line:
// name, mu, J2, A, beta). Any of tab, comma, or spaces delimit fields.
inline std::vector<SystemRecord> parse_systems_table(std::istream& in) {
  std::vector<SystemRecord> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line)
      if (ch == ',' || ch == '\t') ch = ' ';
    if (header) {
      header = false;
      continue;
    }
    std::istringstream ss(line);
    SystemRecord r;
    if (!(ss >> r.name >> r.mu >> r.J2 >> r.A >> r.beta))
      throw DomainError("malformed system record: " + line);
    out.push_back(r);
  }
  return out;
}

inline std::vector<SystemRecord> load_systems_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open systems file: " + path);
  return parse_systems_table(in);
}

}  // namespace halo
