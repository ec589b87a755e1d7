// Runs the full analytic chain for each bundled system at L1 and prints the
// energy budget between the linear regime and the first halo bifurcation.
// Also shows how a physical sail loading maps onto the beta parameter.
#include <cstdio>

#include "halo/pipeline.hpp"

using namespace halo;

int main() {
  std::printf("%-16s %12s %12s %12s %12s %12s\n", "system", "gamma1", "omega_p",
              "omega_v", "h_halo", "h_vertical");
  for (const auto& rec : builtin_systems()) {
    const ModelParams p = build_params(rec.mu, rec.beta, rec.A);
    const PipelineResult r = run_pipeline(p, 1, 4);
    std::printf("%-16s %12.6g %12.8f %12.8f %12.6g %12.6g\n", rec.name.c_str(),
                r.point.gamma, r.resonant.omp, r.resonant.omv, r.th.h_ly, r.th.h_lz);
  }

  // a 30 g/m^2 sail with 90 percent reflectivity
  const double beta = sail_performance(1.9, 0.030);
  std::printf("\nsail at 30 g/m^2, Q=1.9: beta = %.4g\n", beta);
  const ModelParams p = build_params(find_system(builtin_systems(), "sun-vesta").mu,
                                     beta, 0.0);
  const PipelineResult r = run_pipeline(p, 1, 4);
  std::printf("sun-vesta with that sail: gamma1 = %.6g, h_halo = %.6g\n",
              r.point.gamma, r.th.h_ly);
  return 0;
}
