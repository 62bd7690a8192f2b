#include "classym/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "classym/flag_models.hpp"
#include "classym/parabolic.hpp"

namespace classym {

namespace {

std::string pq(int p, int q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

ModelSpace model(std::string name, int n_model, bool quadric, RealFormSpec cls,
                 std::vector<std::string> orbits = {}) {
  return ModelSpace{std::move(name), 2 * n_model, quadric, cls, std::move(orbits)};
}

/// Model lists per family. `spec` has all low-rank redirects applied.
std::vector<ModelSpace> model_table(const RealFormSpec& spec) {
  int k = ambient_size(spec);
  int n = model_projective_dimension(spec);
  std::vector<ModelSpace> out;

  switch (spec.family) {
    case Family::SU:
      out.push_back(model(projective_model_name(n), n, false, spec));
      if (spec.q >= 1) {
        out.push_back(model("B+" + pq(spec.p, spec.q), n, false, spec, {"B+"}));
        out.push_back(model("B-" + pq(spec.p, spec.q), n, false, spec, {"B-"}));
      }
      return out;

    case Family::SL_R:
      out.push_back(model(projective_model_name(n), n, false, spec));
      out.push_back(model(projective_model_name(n) + " - RP^" + std::to_string(n), n,
                          false, spec, {"open"}));
      return out;

    case Family::SL_H:
      out.push_back(model(projective_model_name(n), n, false, spec));
      return out;

    case Family::SP_PQ:
      out.push_back(model(projective_model_name(n), n, false, spec));
      if (spec.q >= 1) {
        out.push_back(model("B+" + pq(2 * spec.p, 2 * spec.q), n, false, spec, {"Bhat+"}));
        out.push_back(model("B-" + pq(2 * spec.p, 2 * spec.q), n, false, spec, {"Bhat-"}));
      }
      return out;

    case Family::SP_R: {
      int l = spec.m / 2;
      out.push_back(model(projective_model_name(n), n, false, spec));
      out.push_back(model(projective_model_name(n) + " - RP^" + std::to_string(n), n,
                          false, spec, {"D+", "D-", "Sigma"}));
      out.push_back(model("B+" + pq(l, l), n, false, spec, {"D+", "D-"}));
      return out;
    }

    case Family::SO_PQ: {
      if (k == 5) {
        // The three forms on the three-dimensional quadric, each paired with
        // its symplectic partner acting on P^3.
        if (spec.p == 5) {
          out.push_back(model("P^3", 3, false, RealFormSpec::sp_pq(2, 0)));
          out.push_back(model("Q_3", 3, true, spec));
        } else if (spec.p == 4) {
          RealFormSpec sp11 = RealFormSpec::sp_pq(1, 1);
          out.push_back(model("P^3", 3, false, sp11));
          out.push_back(model("Q_3", 3, true, spec));
          out.push_back(model("B+(2,2)", 3, false, sp11, {"Bhat+"}));
          out.push_back(model("Omega+(4,1)", 3, true, spec, {"Omega+"}));
        } else {
          RealFormSpec sp4r = RealFormSpec::sp_r(4);
          out.push_back(model("P^3", 3, false, sp4r));
          out.push_back(model("Q_3", 3, true, spec));
          out.push_back(model("P^3 - RP^3", 3, false, sp4r, {"D+", "D-", "Sigma"}));
          out.push_back(model("Q_3 - S1(3,2)", 3, true, spec, {"Omega+", "Omega-", "S2"}));
          out.push_back(model("B+(2,2)", 3, false, sp4r, {"D+", "D-"}));
          out.push_back(model("Omega+(3,2)", 3, true, spec, {"Omega+"}));
          out.push_back(model("Omega-(3,2)", 3, true, spec, {"Omega-"}));
        }
        return out;
      }
      RealFormSpec standard = RealFormSpec::so_pq(spec.p, spec.q, 0);
      out.push_back(model(quadric_model_name(n), n, true, standard));
      if (spec.q == 1) {
        out.push_back(model(quadric_model_name(n) + " - S1" + pq(spec.p, spec.q), n,
                            true, standard, {"Omega+", "Omega-", "S2"}));
      } else if (spec.q >= 2) {
        out.push_back(model(quadric_model_name(n) + " - S1" + pq(spec.p, spec.q), n,
                            true, standard, {"Omega+", "Omega-", "S2"}));
        out.push_back(model("Omega+" + pq(spec.p, spec.q), n, true, standard, {"Omega+"}));
        out.push_back(model("Omega-" + pq(spec.p, spec.q), n, true, standard, {"Omega-"}));
      }
      if (k == 8 && spec.p == 6) {
        RealFormSpec tw = RealFormSpec::so_pq(6, 2, 1);
        out.push_back(model("E+(6)", 6, true, tw, {"E+"}));
        out.push_back(model("E-(6)", 6, true, tw, {"E-"}));
      }
      if (k == 8 && spec.p == 5) {
        RealFormSpec tw = RealFormSpec::so_pq(5, 3, 1);
        out.push_back(model("Q_6 - Gamma", 6, true, tw, {"open"}));
      }
      return out;
    }

    case Family::SO_STAR:
      out.push_back(model(quadric_model_name(n), n, true, spec));
      out.push_back(model("E+(" + std::to_string(n) + ")", n, true, spec, {"E+"}));
      out.push_back(model("E-(" + std::to_string(n) + ")", n, true, spec, {"E-"}));
      return out;

    case Family::COMPLEX:
      if (spec.series.series == Series::B && spec.series.k == 5) {
        out.push_back(model("P^3", 3, false, spec));
        out.push_back(model("Q_3", 3, true, spec));
        return out;
      }
      if (model_is_quadric(spec))
        out.push_back(model(quadric_model_name(n), n, true, spec));
      else
        out.push_back(model(projective_model_name(n), n, false, spec));
      return out;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool model_contains(const ModelSpace& m, const QVec& z) {
  if (m.quadric && !on_quadric(z)) return false;
  if (m.orbits.empty()) return true;
  std::string label = classify_point(m.classifier, z).name;
  return std::find(m.orbits.begin(), m.orbits.end(), label) != m.orbits.end();
}

bool model_contains(const ModelSpace& m, const DVec& z, const ToleranceContext& tol) {
  if (m.quadric && !on_quadric(z, tol)) return false;
  if (m.orbits.empty()) return true;
  std::string label = classify_point(m.classifier, z, tol).name;
  return std::find(m.orbits.begin(), m.orbits.end(), label) != m.orbits.end();
}

ManifoldClassification classify_manifolds(const RealFormSpec& spec) {
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("unsupported spec: " + why);

  ManifoldClassification out;
  out.spec = spec;
  out.effective = spec;

  if (spec.family == Family::SO_STAR && spec.m == 8)
    throw std::invalid_argument(
        "so*(8) is handled through the twisted so(6,2) embedding; query so(6,2)");

  if (spec.family == Family::SP_PQ && ambient_size(spec) == 4) {
    out.effective = spec.q == 0 ? RealFormSpec::so_pq(5, 0) : RealFormSpec::so_pq(4, 1);
    out.note = spec_name(spec) + " is isomorphic to " + spec_name(out.effective);
  } else if (spec.family == Family::SP_R && spec.m == 4) {
    out.effective = RealFormSpec::so_pq(3, 2);
    out.note = spec_name(spec) + " is isomorphic to " + spec_name(out.effective);
  } else if (spec.family == Family::SO_PQ && ambient_size(spec) == 6) {
    switch (spec.p) {
      case 6: out.effective = RealFormSpec::su(4, 0); break;
      case 5: out.effective = RealFormSpec::sl_h(2); break;
      case 4: out.effective = RealFormSpec::su(2, 2); break;
      default: out.effective = RealFormSpec::sl_r(4); break;
    }
    out.note = spec_name(spec) + " is isomorphic to " + spec_name(out.effective);
  } else if (spec.family == Family::SO_PQ && spec.twist != 0) {
    out.effective = RealFormSpec::so_pq(spec.p, spec.q, 0);
    out.note = spec_name(spec) + " is isomorphic to " + spec_name(out.effective) +
               "; the model list is the same";
  }

  out.models = model_table(out.effective);
  return out;
}

}  // namespace classym
