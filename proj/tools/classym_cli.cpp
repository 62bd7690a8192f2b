#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "classym/explorer.hpp"
#include "classym/flag_models.hpp"
#include "classym/geometry.hpp"
#include "classym/parabolic.hpp"
#include "classym/theorems.hpp"
#include "classym/triality.hpp"

using json = nlohmann::json;
using namespace classym;

namespace {

struct Options {
  std::string form;
  int p = -1, q = -1, m = -1, n = -1, twist = 0;
  std::string series;
  std::string point;
  std::string format = "json";
  std::uint64_t seed = 0;
  int samples = 10000;
  int probes = 0;
  bool approx = false;
};

Series parse_series(const std::string& s) {
  if (s == "a") return Series::A;
  if (s == "b") return Series::B;
  if (s == "c") return Series::C;
  if (s == "d") return Series::D;
  throw std::invalid_argument("series must be one of a, b, c, d");
}

// Builds the form from --p/--q or the size option --m. Outside of
// check-conditions, --n doubles as the size for single-parameter forms.
RealFormSpec build_spec(const Options& opt, bool n_is_model_dim = false) {
  auto need_pq = [&] {
    if (opt.p < 0 || opt.q < 0) throw std::invalid_argument("--form " + opt.form + " needs --p and --q");
  };
  auto size = [&] {
    if (opt.m >= 0) return opt.m;
    if (!n_is_model_dim && opt.n >= 0) return opt.n;
    throw std::invalid_argument("--form " + opt.form + " needs --m (matrix size)");
  };
  RealFormSpec spec;
  if (opt.form == "su") { need_pq(); spec = RealFormSpec::su(opt.p, opt.q); }
  else if (opt.form == "sl_r") { spec = RealFormSpec::sl_r(size()); }
  else if (opt.form == "sl_h") { spec = RealFormSpec::sl_h(size()); }
  else if (opt.form == "sp") { need_pq(); spec = RealFormSpec::sp_pq(opt.p, opt.q); }
  else if (opt.form == "sp_r") { spec = RealFormSpec::sp_r(size()); }
  else if (opt.form == "so") { need_pq(); spec = RealFormSpec::so_pq(opt.p, opt.q, opt.twist); }
  else if (opt.form == "so_star") { spec = RealFormSpec::so_star(size()); }
  else if (opt.form == "complex") {
    if (opt.series.empty()) throw std::invalid_argument("--form complex needs --series");
    spec = RealFormSpec::complex_as_real({parse_series(opt.series), size()});
  } else {
    throw std::invalid_argument("--form is required (su, sl_r, sl_h, sp, sp_r, so, so_star, complex)");
  }
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("invalid form: " + why);
  return spec;
}

json spec_json(const RealFormSpec& spec) {
  json j{{"name", spec_name(spec)},
         {"ambient", ambient_size(spec)},
         {"real_dim", real_dimension(spec)},
         {"model", (model_is_quadric(spec) ? "Q_" : "P^") +
                       std::to_string(model_projective_dimension(spec))}};
  return j;
}

json label_json(const OrbitLabel& label) {
  return json{{"label", label.name},
              {"dim", label.expected_dim},
              {"boundary_uncertain", label.boundary_uncertain}};
}

void emit(const json& j, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text: one "key: value" line per top-level entry.
  for (auto it = j.begin(); it != j.end(); ++it)
    std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
}

int run_classify(const Options& opt) {
  RealFormSpec spec = build_spec(opt);
  if (opt.point.empty()) throw std::invalid_argument("classify needs --point");
  QVec z = parse_point(opt.point);
  OrbitLabel label = opt.approx ? classify_point(spec, to_float(z))
                                : classify_point(spec, z);
  json j = label_json(label);
  j["form"] = spec_json(spec);
  j["point"] = point_to_string(z);
  j["exact"] = !opt.approx;
  emit(j, opt);
  return 0;
}

int run_classify_manifolds(const Options& opt) {
  ManifoldClassification mc = classify_manifolds(build_spec(opt));
  json models = json::array();
  for (const ModelSpace& m : mc.models)
    models.push_back(json{{"name", m.name},
                          {"dim", m.dim},
                          {"quadric", m.quadric},
                          {"classifier", spec_name(m.classifier)},
                          {"orbits", m.orbits}});
  json j{{"form", spec_json(mc.spec)}, {"models", models}};
  if (!mc.note.empty()) {
    j["effective"] = spec_json(mc.effective);
    j["note"] = mc.note;
  }
  emit(j, opt);
  return 0;
}

int run_orbit_dim(const Options& opt) {
  RealFormSpec spec = build_spec(opt);
  if (opt.point.empty()) throw std::invalid_argument("orbit-dim needs --point");
  QVec z = parse_point(opt.point);
  int d = orbit_dimension(real_form_basis(spec), z);
  json j{{"form", spec_json(spec)}, {"point", point_to_string(z)}, {"orbit_dim", d}};
  emit(j, opt);
  return 0;
}

int run_parabolic_table(const Options& opt) {
  std::vector<SeriesTag> tags;
  if (!opt.series.empty()) {
    if (opt.n < 0) throw std::invalid_argument("parabolic-table with --series needs --n");
    tags.push_back({parse_series(opt.series), opt.n});
  } else {
    for (int k = 2; k <= kMaxMatrixSize; ++k)
      for (Series s : {Series::A, Series::B, Series::C, Series::D})
        if (series_tag_valid({s, k})) tags.push_back({s, k});
  }
  json rows = json::array();
  for (const SeriesTag& tag : tags) {
    json classes = json::array();
    for (const ParabolicClass& c : max_parabolic_classes(tag))
      classes.push_back(json{{"subspace", c.subspace},
                             {"m", c.m},
                             {"stabilizer_dim", c.stabilizer_dim},
                             {"codim", c.codim},
                             {"quotient", c.quotient}});
    rows.push_back(json{{"algebra", series_name(tag)}, {"classes", classes}});
  }
  emit(json{{"table", rows}}, opt);
  return 0;
}

int run_verify_triality(const Options& opt) {
  std::string why;
  bool auto_ok = verify_theta_automorphism(&why);

  LieBasis tw = twisted_real_form(5, 3, 1);
  int satisfied = 0;
  for (const QMat& x : tw.mats)
    if (check_so53_conditions(x).all) ++satisfied;
  bool cond_ok = satisfied == tw.dim();

  bool dims_ok = true;
  for (int p = 5; p <= 7; ++p)
    for (int twist = 1; twist <= 2; ++twist)
      dims_ok = dims_ok && twisted_real_form(p, 8 - p, twist).dim() == 28;

  json j{{"automorphism", auto_ok},
         {"so53_conditions_satisfied", satisfied},
         {"so53_basis_size", tw.dim()},
         {"so53_solution_space_dim", so53_condition_solution_dimension()},
         {"twisted_dims_ok", dims_ok}};
  if (!auto_ok) j["why"] = why;
  emit(j, opt);
  return (auto_ok && cond_ok && dims_ok) ? 0 : 1;
}

int run_check_conditions(const Options& opt) {
  RealFormSpec spec = build_spec(opt, /*n_is_model_dim=*/true);
  if (opt.n < 0) throw std::invalid_argument("check-conditions needs --n (model dimension)");
  ConditionResult r = check_conditions(spec, opt.n);
  json j{{"form", spec_json(spec)},
         {"normalized", series_name(r.normalized)},
         {"k", r.k},
         {"n", r.n},
         {"condition_gt", r.condition_gt},
         {"condition_eq", r.condition_eq},
         {"admissible", r.admissible},
         {"models", r.models}};
  emit(j, opt);
  return 0;
}

int run_explore(const Options& opt) {
  RealFormSpec spec = build_spec(opt);
  CensusReport census = empirical_orbit_census(spec, opt.samples, opt.seed);
  json counts = json::object(), dims = json::object();
  for (const auto& [name, count] : census.counts) counts[name] = count;
  for (const auto& [name, d] : census.dims) dims[name] = d;
  json j{{"form", spec_json(spec)},
         {"samples", opt.samples},
         {"seed", opt.seed},
         {"counts", counts},
         {"dims", dims},
         {"constructed", census.constructed},
         {"boundary_uncertain", census.boundary_uncertain}};
  bool ok = true;
  if (opt.probes > 0) {
    StabilityReport stab = invariant_stability_test(spec, opt.probes, opt.seed);
    j["stability"] = json{{"probes", stab.probes},
                          {"label_changes", stab.label_changes},
                          {"scaling_changes", stab.scaling_changes},
                          {"max_quadric_drift", stab.max_quadric_drift},
                          {"ok", stab.ok}};
    ok = stab.ok;
  }
  emit(j, opt);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit classification on projective and quadric models"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--form", opt.form, "su, sl_r, sl_h, sp, sp_r, so, so_star, complex");
  app.add_option("--p", opt.p, "signature p");
  app.add_option("--q", opt.q, "signature q");
  app.add_option("--m", opt.m, "matrix size for sl_r, sl_h, sp_r, so_star, complex");
  app.add_option("--n", opt.n, "model dimension (also accepted as the size outside check-conditions)");
  app.add_option("--twist", opt.twist, "triality twist for so with p+q=8 (0, 1, 2)");
  app.add_option("--series", opt.series, "a, b, c, d (complex form / parabolic table)");
  app.add_option("--point", opt.point, "colon-separated coordinates, e.g. 1:i:0");
  app.add_option("--format", opt.format, "json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "RNG seed")->envname("CLASSYM_SEED");
  app.add_option("--samples", opt.samples, "census sample count");
  app.add_option("--probes", opt.probes, "stability probes (explore)");
  app.add_flag("--approx", opt.approx, "classify in floating point instead of exactly");
  app.set_config("--config", "", "key=value option file");

  auto* classify = app.add_subcommand("classify", "orbit label of a point");
  auto* manifolds = app.add_subcommand("classify-manifolds", "model spaces of a form");
  auto* orbitdim = app.add_subcommand("orbit-dim", "exact orbit dimension at a point");
  auto* parabolic = app.add_subcommand("parabolic-table", "maximal parabolic classes");
  auto* triality = app.add_subcommand("verify-triality", "check the so8 outer automorphism");
  auto* explore = app.add_subcommand("explore", "Monte Carlo orbit census");
  auto* conditions = app.add_subcommand("check-conditions", "size conditions for a model");
  for (auto* sub : {classify, manifolds, orbitdim, parabolic, triality, explore, conditions})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return run_classify(opt);
    if (manifolds->parsed()) return run_classify_manifolds(opt);
    if (orbitdim->parsed()) return run_orbit_dim(opt);
    if (parabolic->parsed()) return run_parabolic_table(opt);
    if (triality->parsed()) return run_verify_triality(opt);
    if (explore->parsed()) return run_explore(opt);
    if (conditions->parsed()) return run_check_conditions(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
