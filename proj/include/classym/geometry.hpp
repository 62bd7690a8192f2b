#ifndef CLASSYM_GEOMETRY_HPP
#define CLASSYM_GEOMETRY_HPP

#include "classym/lie_core.hpp"

namespace classym {

/// Derivative of the projective action of exp(tX) at z, in the affine chart
/// where the pivot coordinate is held at 1: v = (Xz - mu z) / z_piv with
/// mu = (Xz)_piv / z_piv, the pivot slot removed.
QVec tangent_chart_vector(const QMat& x, const QVec& z, int pivot);
DVec tangent_chart_vector(const DMat& x, const DVec& z, int pivot);

/// Real dimension of the orbit of z under the group generated by the basis:
/// the real rank of the chart tangent vectors. Exact over the rationals.
int orbit_dimension(const LieBasis& basis, const QVec& z);
int orbit_dimension(const LieBasis& basis, const DVec& z,
                    const ToleranceContext& tol = {});

}  // namespace classym

#endif
