#ifndef CLASSYM_INVARIANTS_HPP
#define CLASSYM_INVARIANTS_HPP

#include <string>

#include "classym/lie_core.hpp"

namespace classym {

/// Orbit of a point under the identity component of the real form's group.
/// Names are frozen strings used in CLI output and golden files:
///   su:       B+ B- Q            sp(p,q):  Bhat+ Bhat- Qhat
///   sl(m,R):  open RPn           sp(m,R):  D+ D- Sigma RPn
///   so(p,q):  Omega+ Omega- S1 S2
///   so*(m), so(6,2) twisted: E+ E- S
///   so(5,3) twisted: Gamma open
///   one-orbit actions: transitive
struct OrbitLabel {
  std::string name;
  int expected_dim = -1;          // real dimension of the orbit
  bool boundary_uncertain = false;  // float mode only: near a sign boundary

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    return a.name == b.name && a.expected_dim == b.expected_dim;
  }
};

/// z^dagger diag(I_p, -I_q) z, an exact rational (resp. double).
mpq_class hermitian_form(int p, int q, const QVec& z);
double hermitian_form(int p, int q, const DVec& z);

/// Bilinear signature form: sum of first p squares minus sum of last q.
QScalar bracket_form(int p, int q, const QVec& z);
DScalar bracket_form(int p, int q, const DVec& z);

/// (Re z)^T J (Im z) for the standard symplectic J on even ambient size.
mpq_class symplectic_real_form(const QVec& z);
double symplectic_real_form(const DVec& z);

/// The invariant skew-Hermitian form of the twisted so(6,2) embedding,
/// computed exactly as the solution of X^dagger M + M X = 0 over the twisted
/// basis, with a deterministic normalization. Cached per twist.
const QMat& twisted_so62_invariant_form(int twist);

/// Complex dimension of the solution space the form is drawn from (sanity
/// check; expected 1).
int twisted_so62_form_space_dimension(int twist);

OrbitLabel classify_point(const RealFormSpec& spec, const QVec& z);
OrbitLabel classify_point(const RealFormSpec& spec, const DVec& z,
                          const ToleranceContext& tol = {});

/// True iff the spec's model space is the quadric (so-type families) rather
/// than full projective space.
bool model_is_quadric(const RealFormSpec& spec);

/// Complex projective dimension n of the model space (P^n or Q_n).
int model_projective_dimension(const RealFormSpec& spec);

}  // namespace classym

#endif
