#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tightspan/json_io.hpp"

namespace {

using namespace tightspan;

constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;

struct InputOptions {
  std::string input_path;
  std::string gen_spec;
  long long budget = 1000000000LL;
  int threads = 1;
};

struct LoadedSpace {
  FinMetric metric;
  std::string name;
  std::optional<PointId> center;
  std::optional<long> radius;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  auto* input = cmd->add_option("--input", in.input_path, "metric or graph JSON file");
  auto* gen = cmd->add_option("--gen", in.gen_spec, "generator spec, e.g. hypercube:3");
  input->excludes(gen);
  cmd->add_option("--budget", in.budget, "candidate budget for vertex enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", in.threads, "worker threads for enumeration")
      ->check(CLI::PositiveNumber);
}

LoadedSpace load_space(const InputOptions& in) {
  if (!in.gen_spec.empty()) {
    GeneratedSpace gen = generate_spec(in.gen_spec);
    return {std::move(gen.metric), gen.name, gen.center, gen.radius};
  }
  if (in.input_path.empty()) {
    throw Error(Error::Kind::InvalidInput, "one of --input or --gen is required");
  }
  std::ifstream file(in.input_path);
  if (!file) {
    throw Error(Error::Kind::InvalidInput, "cannot open input file " + in.input_path);
  }
  nlohmann::json doc = nlohmann::json::parse(file);
  return {space_from_json(doc), in.input_path, std::nullopt, std::nullopt};
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw Error(Error::Kind::InvalidInput, "cannot open output file " + out_path);
  }
  file << payload;
}

std::string dump(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

int run_hull(const InputOptions& in, const std::string& out_path, const std::string& format,
             bool subdivide) {
  LoadedSpace space = load_space(in);
  EnumOptions opt{in.budget, in.threads};
  HullComplex complex = build_complex(space.metric, opt);
  auto class_counts = isometry_classes(complex);

  std::map<int, int> cell_counts;
  for (const auto& cell : complex.cells) cell_counts[cell.dim] += 1;
  std::cerr << "space " << space.name << ": " << space.metric.size() << " points, hull dim "
            << hull_dimension(complex) << "\n";
  for (const auto& [dim, count] : cell_counts) {
    std::cerr << "  dim " << dim << ": " << count << " cells, " << class_counts[dim]
              << " isometry classes\n";
  }

  if (format == "off") {
    write_output(out_path, complex_to_off(complex));
  } else if (format == "csv") {
    write_output(out_path, complex_to_csv(complex));
  } else {
    OrderedJson doc = complex_to_json(complex);
    if (subdivide) doc["subdivision"] = subdivision_to_json(barycentric_subdivision(complex));
    write_output(out_path, dump(doc));
  }
  return 0;
}

int run_space(const InputOptions& in, const std::string& out_path, bool interior_only,
              int check_beta) {
  LoadedSpace space = load_space(in);
  std::optional<InteriorFilter> filter;
  if (interior_only) {
    if (!space.center || !space.radius) {
      throw Error(Error::Kind::InvalidInput,
                  "--interior-only needs a generated ball with center and radius");
    }
    filter = InteriorFilter{*space.center, *space.radius};
  }
  OrderedJson doc;
  doc["space"] = space.name;
  doc["points"] = space.metric.size();
  doc["delta"] = rat_to_json(delta_hyperbolicity(space.metric));
  int beta = min_beta(space.metric, filter);
  doc["min_beta"] = beta;
  doc["interior_only"] = interior_only;
  if (check_beta >= 0) {
    StabilityReport rep = check_stable_intervals(space.metric, check_beta, filter);
    OrderedJson check;
    check["beta"] = rep.beta_checked;
    check["holds"] = rep.holds;
    if (rep.witness) {
      // re-verify the witness against the core predicates before reporting
      const auto& w = *rep.witness;
      bool genuine = space.metric.dist(w.y, w.y_prime) == 1;
      auto ixy = interval(space.metric, w.x, w.y);
      genuine = genuine && std::binary_search(ixy.begin(), ixy.end(), w.v);
      for (PointId vp : interval(space.metric, w.x, w.y_prime)) {
        if (space.metric.dist(w.v, vp) <= check_beta) genuine = false;
      }
      if (!genuine) throw std::logic_error("stability witness failed re-verification");
      check["witness"] = {{"x", w.x}, {"y", w.y}, {"y_prime", w.y_prime}, {"v", w.v}};
    }
    doc["stability_check"] = std::move(check);
  }
  OrderedJson cones = OrderedJson::array();
  for (PointId v = 0; v < space.metric.size(); ++v) {
    ConeTypeTable table = cone_types(space.metric, v, beta);
    cones.push_back({{"apex", v},
                     {"cones", table.cones.size()},
                     {"f_classes", table.f_class_count},
                     {"lemma_checked", table.lemma_checked}});
  }
  doc["cone_types"] = std::move(cones);
  std::cerr << "space " << space.name << ": delta "
            << rat_to_string(delta_hyperbolicity(space.metric)) << ", min_beta " << beta
            << "\n";
  write_output(out_path, dump(doc));
  return 0;
}

int run_bicombing(const InputOptions& in, const std::string& out_path, int x, int y,
                  const std::string& t_text, int max_iter, const std::string& cap_text) {
  LoadedSpace space = load_space(in);
  PMapLimits limits;
  limits.max_iter = max_iter;
  if (!cap_text.empty()) limits.residual_cap = rat_from_string(cap_text);
  PMapReport rep = bicombing(space.metric, x, y, rat_from_string(t_text), limits);
  OrderedJson doc = pmap_report_to_json(rep);
  doc["x"] = x;
  doc["y"] = y;
  doc["t"] = t_text;
  std::cerr << "gamma_" << x << "," << y << "(" << t_text << ") = "
            << function_to_string(rep.result)
            << (rep.converged_exactly ? " (exact)" : " (greedy finish)") << "\n";
  write_output(out_path, dump(doc));
  return 0;
}

int run_action(const InputOptions& in, const std::string& out_path,
               const std::string& subgroup_path, bool full_group) {
  LoadedSpace space = load_space(in);
  std::vector<Isometry> group;
  if (full_group) {
    group = isometry_group(space.metric);
  } else if (!subgroup_path.empty()) {
    std::ifstream file(subgroup_path);
    if (!file) {
      throw Error(Error::Kind::InvalidInput, "cannot open subgroup file " + subgroup_path);
    }
    group = subgroup_from_json(nlohmann::json::parse(file));
  } else {
    throw Error(Error::Kind::InvalidInput, "action needs --subgroup FILE or --full");
  }
  EnumOptions opt{in.budget, in.threads};
  HullComplex complex = build_complex(space.metric, opt);
  ActionReport rep = act_on_complex(complex, group);
  OrderedJson doc = action_report_to_json(rep);
  doc["fixed_point_function"] = function_to_json(fixed_point_function(space.metric, group));
  std::cerr << "group order " << rep.group_order << ", " << rep.cell_orbits.size()
            << " cell orbits\n";
  write_output(out_path, dump(doc));
  return 0;
}

int run_vertices(const InputOptions& in, const std::string& out_path) {
  LoadedSpace space = load_space(in);
  EnumOptions opt{in.budget, in.threads};
  auto verts = enumerate_vertices(space.metric, opt);
  OrderedJson doc;
  doc["space"] = space.name;
  OrderedJson arr = OrderedJson::array();
  for (const auto& v : verts) arr.push_back(function_to_json(v));
  doc["vertices"] = std::move(arr);
  std::cerr << verts.size() << " hull vertices\n";
  write_output(out_path, dump(doc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tightspan: exact injective hulls of finite metric spaces"};
  app.require_subcommand(1);

  InputOptions in;
  std::string out_path;
  std::string format = "json";
  bool subdivide = false;
  bool interior_only = false;
  int check_beta = -1;
  int bx = 0, by = 0;
  std::string t_text = "0";
  int max_iter = 64;
  std::string cap_text;
  std::string subgroup_path;
  bool full_group = false;

  auto* hull = app.add_subcommand("hull", "build the polyhedral complex of E(X)");
  add_input_flags(hull, in);
  hull->add_option("--out", out_path, "output file (stdout if omitted)");
  hull->add_option("--format", format, "json|off|csv")->check(CLI::IsMember({"json", "off", "csv"}));
  hull->add_flag("--subdivide", subdivide, "include the barycentric subdivision");

  auto* spc = app.add_subcommand("space", "stability, hyperbolicity and cone-type diagnostics");
  add_input_flags(spc, in);
  spc->add_option("--out", out_path, "output file");
  spc->add_flag("--interior-only", interior_only, "restrict stability checks to interior triples");
  spc->add_option("--beta", check_beta, "additionally check beta-stability for this beta");

  auto* bic = app.add_subcommand("bicombing", "evaluate the geodesic bicombing gamma_xy(t)");
  add_input_flags(bic, in);
  bic->add_option("x", bx, "first endpoint id")->required();
  bic->add_option("y", by, "second endpoint id")->required();
  bic->add_option("t", t_text, "parameter in [0,1], integer or p/q")->required();
  bic->add_option("--out", out_path, "output file");
  bic->add_option("--max-iter", max_iter, "q-iteration cap")->check(CLI::PositiveNumber);
  bic->add_option("--residual-cap", cap_text, "stop when the residual drops below this rational");

  auto* act = app.add_subcommand("action", "isometry action on the hull complex");
  add_input_flags(act, in);
  act->add_option("--out", out_path, "output file");
  act->add_option("--subgroup", subgroup_path, "JSON list of permutations");
  act->add_flag("--full", full_group, "use the full isometry group");

  auto* verts = app.add_subcommand("vertices", "enumerate the hull vertices");
  add_input_flags(verts, in);
  verts->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; anything else is invalid input
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (hull->parsed()) return run_hull(in, out_path, format, subdivide);
    if (spc->parsed()) return run_space(in, out_path, interior_only, check_beta);
    if (bic->parsed()) return run_bicombing(in, out_path, bx, by, t_text, max_iter, cap_text);
    if (act->parsed()) return run_action(in, out_path, subgroup_path, full_group);
    if (verts->parsed()) return run_vertices(in, out_path);
  } catch (const MetricRejected& err) {
    OrderedJson doc;
    doc["error"] = "invalid metric";
    doc["violations"] = violations_to_json(err.violations);
    std::cerr << doc.dump(2) << "\n";
    return kExitInvalid;
  } catch (const Error& err) {
    std::cerr << "error (" << error_kind_name(err.kind()) << "): " << err.what() << "\n";
    return err.kind() == Error::Kind::BudgetExceeded ? kExitBudget : kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
