#ifndef CLASSYM_FLAG_MODELS_HPP
#define CLASSYM_FLAG_MODELS_HPP

#include <random>
#include <string>

#include "classym/types.hpp"

namespace classym {

/// Canonical representative of a projective point: divide by the pivot,
/// the entry of largest modulus (lowest index on ties). Exact version uses
/// |z|^2 comparisons, so no rounding is involved.
QVec canonicalize(const QVec& z);
DVec canonicalize(const DVec& z);

/// Index of the canonical pivot entry.
int pivot_index(const QVec& z);
int pivot_index(const DVec& z);

/// Sum of squares of the coordinates (the quadric's defining form).
QScalar square_sum(const QVec& z);
DScalar square_sum(const DVec& z);

bool on_quadric(const QVec& z);
bool on_quadric(const DVec& z, const ToleranceContext& tol = {});

/// True iff z is a complex multiple of a real vector, i.e. the real span of
/// (Re z, Im z) has rank <= 1.
bool is_projectively_real(const QVec& z);
bool is_projectively_real(const DVec& z, const ToleranceContext& tol = {});

/// Parses "1:i:0" style coordinates; entries use the exact scalar grammar.
QVec parse_point(const std::string& s);
std::string point_to_string(const QVec& z);
std::string point_to_string(const DVec& z);

/// Standard-Gaussian complex sample in C^k, canonicalized.
DVec random_projective_point(int k, std::mt19937_64& rng);

/// Point of the quadric sum z_j^2 = 0 in C^k: z = x + iy with x, y real
/// Gaussian made orthogonal and of equal length.
DVec random_quadric_point(int k, std::mt19937_64& rng);

/// Exact rational quadric point: image of a random small-integer vector u
/// under the quadratic parametrization z = (u.u) z0 - 2 (z0.u) u anchored at
/// z0 = (1, i, 0, ..., 0).
QVec random_quadric_point_exact(int k, std::mt19937_64& rng);

}  // namespace classym

#endif
