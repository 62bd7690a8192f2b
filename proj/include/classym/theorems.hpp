#ifndef CLASSYM_THEOREMS_HPP
#define CLASSYM_THEOREMS_HPP

#include <string>
#include <vector>

#include "classym/invariants.hpp"

namespace classym {

/// A model manifold appearing in the classification: the compact model, an
/// open orbit, or the complement of a lower-dimensional orbit. Membership is
/// executable: classify the point with `classifier` and match the orbit set
/// (an empty orbit set means the whole compact model).
struct ModelSpace {
  std::string name;
  int dim = 0;                 // real dimension
  bool quadric = false;        // ambient compact model is the quadric
  RealFormSpec classifier;
  std::vector<std::string> orbits;
};

bool model_contains(const ModelSpace& model, const QVec& z);
bool model_contains(const ModelSpace& model, const DVec& z,
                    const ToleranceContext& tol = {});

struct ManifoldClassification {
  RealFormSpec spec;           // the queried form
  RealFormSpec effective;      // after low-rank isomorphism redirects
  std::string note;            // nonempty when a redirect happened
  std::vector<ModelSpace> models;
};

/// The list of model manifolds the form acts on, exactly as in the
/// classification tables. Throws for so*(8), which is handled through the
/// twisted so(6,2) embedding.
ManifoldClassification classify_manifolds(const RealFormSpec& spec);

}  // namespace classym

#endif
