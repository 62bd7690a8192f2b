#ifndef CLASSYM_EXPLORER_HPP
#define CLASSYM_EXPLORER_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "classym/invariants.hpp"

namespace classym {

/// Deterministic per-trial stream: trial index hashed into the base seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Random element of the real span of the basis, coefficients uniform [-1,1].
DMat random_algebra_element(const LieBasis& basis, std::mt19937_64& rng);

/// exp(tX) z, canonicalized.
DVec flow_point(const DMat& x, const DVec& z, double t);

/// Sample from the model space of the form (P^n or the quadric).
DVec sample_model_point(const RealFormSpec& spec, std::mt19937_64& rng);

struct FlowConfig {
  double t_max = 1.0;
  int steps = 20;
};

struct StabilityReport {
  int probes = 0;
  int label_changes = 0;    // classification changed along a flow line
  int scaling_changes = 0;  // classification changed under complex rescaling
  double max_quadric_drift = 0.0;  // worst |sum z^2| / |z|^2 along flows
  bool ok = false;
};

/// For each probe: sample a point, a random algebra element, flow across the
/// t-grid and rescale by random complex factors; the orbit label must never
/// change and quadric membership must be preserved.
StabilityReport invariant_stability_test(const RealFormSpec& spec, int probes,
                                         std::uint64_t seed,
                                         const FlowConfig& flow = {},
                                         const ToleranceContext& tol = {});

struct CensusReport {
  std::map<std::string, int> counts;          // label -> occurrences
  std::map<std::string, int> dims;            // label -> expected orbit dim
  std::vector<std::string> constructed;       // labels hit only via base points
  int boundary_uncertain = 0;
};

/// Monte Carlo orbit census: classify `samples` random model points, then add
/// constructed base points so that measure-zero orbits appear in the label
/// set. Deterministic in `seed`.
CensusReport empirical_orbit_census(const RealFormSpec& spec, int samples,
                                    std::uint64_t seed,
                                    const ToleranceContext& tol = {});

/// Exact base points of the measure-zero orbits of the form, where a closed
/// form exists (twisted so(6,2) boundary points are found numerically inside
/// the census instead).
std::vector<QVec> constructed_base_points(const RealFormSpec& spec);

}  // namespace classym

#endif
