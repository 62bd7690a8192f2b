#ifndef CLASSYM_PARABOLIC_HPP
#define CLASSYM_PARABOLIC_HPP

#include <string>
#include <vector>

#include "classym/lie_core.hpp"

namespace classym {

/// A linear subspace of C^k given by spanning columns, with a display name.
struct Subspace {
  QMat span;  // k x m, full column rank
  std::string name;
};

/// span{e_1, ..., e_m}. Isotropic for the symplectic form when m <= k/2.
Subspace coordinate_subspace(int k, int m);

/// span{e_{2j-1} + i e_{2j} : j = 1..m}, isotropic for sum z^2. The primed
/// variant flips the first vector to -e_1 + i e_2, giving the second family
/// of maximal isotropics in even dimension.
Subspace isotropic_pair_subspace(int k, int m, bool primed = false);

/// dim over the basis field of {X in span(basis) : X L <= L}. Exact.
int stabilizer_dimension(const LieBasis& basis, const QMat& span);

/// One maximal parabolic class whose quotient is the compact model space.
struct ParabolicClass {
  std::string subspace;
  int m = 0;
  int stabilizer_dim = 0;  // complex dimension
  int codim = 0;           // = dim of the quotient model
  std::string quotient;    // "P^{k-1}" or "Q_{k-2}" style
};

/// Sweeps the isotropic coordinate subspaces of the series and keeps those
/// whose stabilizer has codimension equal to the compact model dimension.
/// All stabilizer dimensions are computed exactly.
std::vector<ParabolicClass> max_parabolic_classes(const SeriesTag& tag);

/// Size/degree conditions deciding whether the form can act on the model of
/// projective dimension n. k is the defining size of the complexification
/// after the low-rank normalizations sp4 -> so5 and so6 -> sl4.
struct ConditionResult {
  SeriesTag normalized{Series::A, 0};
  int k = 0;
  int n = 0;
  bool condition_gt = false;  // k > n (A/C), k > n+1 (B/D)
  bool condition_eq = false;  // k = n+1 (A/C), k = n+2 (B/D)
  bool admissible = false;    // both hold
  std::vector<std::string> models;  // nonempty iff admissible
};
ConditionResult check_conditions(const RealFormSpec& spec, int n);

/// The complexification of a real form, normalized at low rank.
SeriesTag normalized_complexification(const RealFormSpec& spec);

std::string projective_model_name(int n);  // "P^n"
std::string quadric_model_name(int n);     // "Q_n"

}  // namespace classym

#endif
