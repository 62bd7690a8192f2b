#include "classym/explorer.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "classym/flag_models.hpp"

namespace classym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

QVec unit_vector(int k, int j) {
  QVec z = QVec::Constant(k, QScalar(0));
  z(j) = QScalar(1);
  return z;
}

/// Projects z = x + iy back onto the quadric by re-orthogonalizing y against
/// x and equalizing lengths. Returns false if the pair degenerates.
bool quadric_correct(DVec& z) {
  Eigen::VectorXd x = z.real(), y = z.imag();
  if (x.norm() < 1e-9) return false;
  y -= (x.dot(y) / x.squaredNorm()) * x;
  if (y.norm() < 1e-9) return false;
  y *= x.norm() / y.norm();
  for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = DScalar(x(j), y(j));
  return true;
}

/// Boundary point of the twisted so(6,2) orbits: bisects a quadric-corrected
/// path between an E+ and an E- point until the form value is inside the
/// zero band.
bool find_so62_boundary_point(int twist, std::uint64_t seed,
                              const ToleranceContext& tol, DVec& out) {
  RealFormSpec spec = RealFormSpec::so_pq(6, 2, twist);
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng = trial_rng(seed, 0xb15ec7 + attempt);
    DVec zp, zm;
    bool have_p = false, have_m = false;
    for (int tries = 0; tries < 400 && !(have_p && have_m); ++tries) {
      DVec z = random_quadric_point(8, rng);
      std::string label = classify_point(spec, z, tol).name;
      if (label == "E+" && !have_p) { zp = z; have_p = true; }
      if (label == "E-" && !have_m) { zm = z; have_m = true; }
    }
    if (!(have_p && have_m)) continue;
    DVec lo = zp, hi = zm;
    bool failed = false;
    for (int it = 0; it < 200; ++it) {
      DVec mid = 0.5 * (lo + hi);
      if (!quadric_correct(mid)) { failed = true; break; }
      mid = canonicalize(mid);
      std::string label = classify_point(spec, mid, tol).name;
      if (label == "S") { out = mid; return true; }
      if (label == "E+") lo = mid;
      else hi = mid;
    }
    (void)failed;
  }
  return false;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(seed ^ splitmix64(trial + 1));
}

DMat random_algebra_element(const LieBasis& basis, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  DMat x = DMat::Zero(basis.matrix_size, basis.matrix_size);
  for (const QMat& b : basis.mats) x += coeff(rng) * to_float(b);
  return x;
}

DVec flow_point(const DMat& x, const DVec& z, double t) {
  DMat g = (t * x).exp();
  return canonicalize(DVec(g * z));
}

DVec sample_model_point(const RealFormSpec& spec, std::mt19937_64& rng) {
  int k = ambient_size(spec);
  return model_is_quadric(spec) ? random_quadric_point(k, rng)
                                : random_projective_point(k, rng);
}

StabilityReport invariant_stability_test(const RealFormSpec& spec, int probes,
                                         std::uint64_t seed, const FlowConfig& flow,
                                         const ToleranceContext& tol) {
  LieBasis basis = real_form_basis(spec);
  bool quadric = model_is_quadric(spec);
  StabilityReport report;
  report.probes = probes;
  for (int trial = 0; trial < probes; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    DVec z = sample_model_point(spec, rng);
    OrbitLabel base = classify_point(spec, z, tol);
    if (base.boundary_uncertain) continue;  // a hair from the wall; skip

    DMat x = random_algebra_element(basis, rng);
    for (int step = 1; step <= flow.steps; ++step) {
      double t = flow.t_max * step / flow.steps;
      DVec zt = flow_point(x, z, t);
      if (quadric) {
        double drift = std::abs(square_sum(zt)) / zt.squaredNorm();
        report.max_quadric_drift = std::max(report.max_quadric_drift, drift);
      }
      OrbitLabel moved = classify_point(spec, zt, tol);
      if (moved.name != base.name && !moved.boundary_uncertain) {
        ++report.label_changes;
        break;
      }
    }

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 3; ++rep) {
      DScalar c(u(rng), u(rng));
      if (std::abs(c) < 1e-3) continue;
      OrbitLabel scaled = classify_point(spec, DVec(c * z), tol);
      if (scaled.name != base.name && !scaled.boundary_uncertain) {
        ++report.scaling_changes;
        break;
      }
    }
  }
  report.ok = report.label_changes == 0 && report.scaling_changes == 0 &&
              report.max_quadric_drift <= tol.flow_residual;
  return report;
}

std::vector<QVec> constructed_base_points(const RealFormSpec& spec) {
  int k = ambient_size(spec);
  std::vector<QVec> points;
  switch (spec.family) {
    case Family::SU:
      if (spec.q >= 1) points.push_back(unit_vector(k, 0) + unit_vector(k, k - 1));
      break;
    case Family::SL_R:
      points.push_back(unit_vector(k, 0));
      break;
    case Family::SP_PQ:
      if (spec.q >= 1) points.push_back(unit_vector(k, 0) + unit_vector(k, spec.p));
      break;
    case Family::SP_R:
      points.push_back(unit_vector(k, 0));
      points.push_back(unit_vector(k, 0) + QScalar::i() * unit_vector(k, k - 1));
      break;
    case Family::SO_PQ: {
      if (spec.twist != 0) {
        if (spec.p == 5) {
          QVec gamma = QVec::Constant(8, QScalar(0));
          gamma(0) = QScalar(1);
          gamma(4) = QScalar::i();
          points.push_back(std::move(gamma));
        }
        break;  // twisted so(6,2) boundary points are found numerically
      }
      if (spec.q >= 1)
        points.push_back(unit_vector(k, 0) + QScalar::i() * unit_vector(k, k - 1));
      if (spec.q >= 2 && spec.p >= 2) {
        QVec w = QVec::Constant(k, QScalar(0));
        w(0) = QScalar(1);
        w(1) = QScalar::i();
        w(k - 2) = QScalar::i();
        w(k - 1) = QScalar(1);
        // z = diag(I_p, i I_q) w
        for (int j = spec.p; j < k; ++j) w(j) = QScalar::i() * w(j);
        points.push_back(std::move(w));
      }
      break;
    }
    case Family::SO_STAR:
      points.push_back(unit_vector(k, 0) + QScalar::i() * unit_vector(k, 1));
      break;
    case Family::SL_H:
    case Family::COMPLEX:
      break;
  }
  return points;
}

CensusReport empirical_orbit_census(const RealFormSpec& spec, int samples,
                                    std::uint64_t seed, const ToleranceContext& tol) {
  CensusReport report;
  for (int trial = 0; trial < samples; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    DVec z = sample_model_point(spec, rng);
    OrbitLabel label = classify_point(spec, z, tol);
    if (label.boundary_uncertain) {
      ++report.boundary_uncertain;
      continue;
    }
    ++report.counts[label.name];
    report.dims[label.name] = label.expected_dim;
  }

  for (const QVec& z : constructed_base_points(spec)) {
    OrbitLabel label = classify_point(spec, z);  // exact
    if (!report.counts.count(label.name)) report.constructed.push_back(label.name);
    ++report.counts[label.name];
    report.dims[label.name] = label.expected_dim;
  }
  if (spec.family == Family::SO_PQ && spec.twist != 0 && spec.p == 6) {
    DVec boundary;
    if (find_so62_boundary_point(spec.twist, seed, tol, boundary)) {
      OrbitLabel label = classify_point(spec, boundary, tol);
      if (!report.counts.count(label.name)) report.constructed.push_back(label.name);
      ++report.counts[label.name];
      report.dims[label.name] = label.expected_dim;
    }
  }
  return report;
}

}  // namespace classym
