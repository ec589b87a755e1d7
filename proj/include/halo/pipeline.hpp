#pragma once

// End-to-end analytic chain for one collinear point: locate the equilibrium,
// build the symplectic linear data, expand the Hamiltonian, reduce to the
// center manifold, normalize around the 1:1 resonance, and evaluate the
// bifurcation thresholds.

#include "halo/equilibria.hpp"
#include "halo/expansion.hpp"
#include "halo/lie.hpp"
#include "halo/linear.hpp"
#include "halo/params.hpp"
#include "halo/resonant.hpp"
#include "halo/thresholds.hpp"

namespace halo {

struct PipelineResult {
  CollinearPoint point;
  LinearData lin;
  ExpansionResult expansion;
  CMReduction cm;
  ResonantForm resonant;
  Thresholds th;
};

inline PipelineResult run_pipeline(const ModelParams& p, int j, int N) {
  PipelineResult r;
  r.point = locate(p, j);
  r.lin = linearize(p, j, r.point.alpha);
  r.expansion = expand_hamiltonian(p, r.point.gamma, r.point.alpha, N);
  r.cm = reduce_to_center_manifold(r.expansion.H, r.lin, N);
  r.resonant = resonant_normal_form(r.cm.CM, r.lin.om1, r.lin.om2, N);
  r.th = thresholds(r.resonant);
  return r;
}

}  // namespace halo
