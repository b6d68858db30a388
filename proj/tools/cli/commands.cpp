#include "commands.hpp"

#include "simplexvol/counterexample.hpp"
#include "simplexvol/errors.hpp"
#include "simplexvol/inverse.hpp"
#include "simplexvol/jacobian.hpp"
#include "simplexvol/kneser.hpp"
#include "simplexvol/simplex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace simplexvol::cli {
namespace {

using nlohmann::json;

/// Bad flags or parameters detected while running a command.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json header(const std::string& command) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

template <typename T>
T required(const std::optional<T>& value, const char* flag) {
  if (!value) {
    throw UsageError(std::string("missing required option --") + flag);
  }
  return *value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SimplexSpec load_simplex(const CommandConfig& config) {
  return simplex_from_json(read_file(required(config.input_path, "input")));
}

void require_json(const CommandConfig& config) {
  if (config.output_format != OutputFormat::json) {
    throw UsageError(config.command + " has no CSV form");
  }
}

std::string csv_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json spec_json(const SimplexSpec& spec) { return json::parse(simplex_to_json(spec)); }

RunResult finish(const json& doc, bool passed) {
  return {passed ? kSuccess : kVerificationFailure, doc.dump(2) + "\n", ""};
}

RunResult run_volume(const CommandConfig& config) {
  require_json(config);
  const SimplexSpec spec = load_simplex(config);
  const Subset face = config.face.empty() ? FaceIndex::full(spec.num_vertices()).vertices()
                                          : FaceIndex::from_vertices(config.face, spec.num_vertices()).vertices();
  json doc = header("volume");
  doc["n"] = spec.dimension();
  doc["face"] = face;
  const double v2 = squared_volume(spec, face);
  doc["squared_volume"] = v2;
  if (auto exact = exact_squared_volume(spec, face)) {
    doc["squared_volume_exact"] = to_string(*exact);
  }
  try {
    doc["volume"] = face_volume(spec, face);
    return finish(doc, true);
  } catch (const RealizabilityError&) {
    doc["volume"] = nullptr;
    return finish(doc, false);
  }
}

RunResult run_faces(const CommandConfig& config) {
  const SimplexSpec spec = load_simplex(config);
  const int d = required(config.face_dim, "face-dim");
  const FaceVolumeVector volumes = all_face_volumes(spec, d);
  if (config.output_format == OutputFormat::csv) {
    std::string out = "complement,vertices,volume\n";
    for (std::size_t i = 0; i < volumes.size(); ++i) {
      auto join = [](const Subset& s) {
        std::string r;
        for (std::size_t j = 0; j < s.size(); ++j) {
          r += (j ? "-" : "") + std::to_string(s[j]);
        }
        return r;
      };
      out += join(volumes.keys[i]) + "," + join(volumes.face(i).vertices()) + "," + csv_real(volumes.values[i]) + "\n";
    }
    return {kSuccess, out, ""};
  }
  json doc = header("faces");
  doc["n"] = spec.dimension();
  doc["face_dim"] = d;
  json faces = json::array();
  for (std::size_t i = 0; i < volumes.size(); ++i) {
    faces.push_back({{"complement", volumes.keys[i]},
                     {"vertices", volumes.face(i).vertices()},
                     {"volume", volumes.values[i]}});
  }
  doc["faces"] = std::move(faces);
  return finish(doc, true);
}

RunResult run_realizable(const CommandConfig& config) {
  require_json(config);
  const SimplexSpec spec = load_simplex(config);
  const RealizabilityCertificate cert = is_realizable(spec);
  json doc = header("realizable");
  doc["n"] = spec.dimension();
  doc["realizable"] = cert.realizable;
  doc["embeddable"] = cert.embeddable;
  doc["min_eigenvalue"] = cert.min_eigenvalue;
  doc["trace"] = cert.trace;
  doc["tolerance"] = cert.tolerance;
  return finish(doc, cert.realizable);
}

RunResult run_jacobian(const CommandConfig& config) {
  require_json(config);
  json doc = header("jacobian");
  if (config.input_path) {
    const SimplexSpec spec = load_simplex(config);
    const double tol = config.tol.value_or(1e-6);
    const JacobianMatrix analytic = analytic_jacobian(spec);
    const JacobianMatrix fd = fd_jacobian(spec);
    const RankReport rank = jacobian_rank(analytic);
    const double deviation = (analytic.entries - fd.entries).cwiseAbs().maxCoeff();
    const double scale = analytic.entries.cwiseAbs().maxCoeff();
    doc["n"] = spec.dimension();
    doc["reference"] = "finite_difference";
    doc["max_abs_deviation"] = deviation;
    doc["rank"] = rank.rank;
    doc["sv_ratio"] = rank.sv_ratio;
    const bool passed = deviation <= tol * scale &&
                        static_cast<std::uint64_t>(rank.rank) == binomial(spec.dimension() + 1, 2);
    doc["passed"] = passed;
    return finish(doc, passed);
  }
  const int n = required(config.n, "n");
  if (n < 3) {
    throw UsageError("jacobian at the regular simplex needs --n >= 3");
  }
  const double tol = config.tol.value_or(1e-9);
  const RegularPointReport report = verify_regular_point(n);
  doc["n"] = n;
  doc["reference"] = "regular_point";
  doc["c"] = report.c;
  doc["max_abs_deviation"] = report.max_abs_deviation;
  doc["rank"] = report.rank;
  doc["sv_ratio"] = report.sv_ratio;
  doc["passed"] = report.passed(tol);
  return finish(doc, report.passed(tol));
}

RunResult run_spectrum(const CommandConfig& config) {
  require_json(config);
  const int n = required(config.n, "n");
  const int k = required(config.k, "k");
  const KneserAdjacency adj = build_kneser_adjacency(n, k, config.max_order);
  const SpectrumSpec spectrum = predicted_spectrum(n, k, config.max_order).sorted_descending();
  const bool annihilation = verify_annihilation(adj, spectrum);
  const Integer det = exact_determinant(adj);
  json doc = header("spectrum");
  doc["n"] = n;
  doc["k"] = k;
  doc["eigenvalues"] = spectrum.eigenvalues;
  doc["multiplicities"] = spectrum.multiplicities;
  doc["det"] = to_string(det);
  doc["annihilation"] = annihilation;
  doc["det_matches_spectrum"] = abs(det) == determinant_from_spectrum(spectrum);
  return finish(doc, annihilation);
}

json pair_row(const CounterexamplePair& pair) {
  return {{"n", pair.n},
          {"x", pair.x},
          {"t_minus", pair.minus.t},
          {"t_plus", pair.plus.t},
          {"max_facevol_reldiff", pair.report.facevol_max_reldiff},
          {"vol_minus", pair.report.vol_minus},
          {"vol_plus", pair.report.vol_plus},
          {"vol_reldiff", pair.report.vol_reldiff}};
}

RunResult run_counterexample(const CommandConfig& config) {
  const int n = required(config.n, "n");
  const double x = required(config.x, "x");
  const double tol = config.tol.value_or(1e-10);
  const CounterexamplePair pair = build_pair(n, x, tol);
  if (config.output_format == OutputFormat::csv) {
    const SweepRow row{n, x, pair.minus.t, pair.plus.t, pair.report.facevol_max_reldiff,
                       pair.report.vol_minus, pair.report.vol_plus, pair.report.vol_reldiff};
    return {pair.report.passed ? kSuccess : kVerificationFailure, sweep_to_csv({row}), ""};
  }
  json doc = header("counterexample");
  doc.update(pair_row(pair));
  doc["tol"] = tol;
  doc["non_congruent"] = pair.report.non_congruent;
  doc["passed"] = pair.report.passed;
  doc["instances"] = {{"minus", json::parse(instance_to_json(pair.minus))},
                      {"plus", json::parse(instance_to_json(pair.plus))}};
  return finish(doc, pair.report.passed);
}

RunResult run_sweep(const CommandConfig& config) {
  const int n = required(config.n, "n");
  const std::vector<SweepRow> rows = sweep(n, config.points);
  if (config.output_format == OutputFormat::csv || !config.format_given) {
    return {kSuccess, sweep_to_csv(rows), ""};
  }
  json doc = header("sweep");
  json list = json::array();
  for (const SweepRow& r : rows) {
    list.push_back({{"n", r.n}, {"x", r.x}, {"t_minus", r.t_minus}, {"t_plus", r.t_plus},
                    {"max_facevol_reldiff", r.max_facevol_reldiff}, {"vol_minus", r.vol_minus},
                    {"vol_plus", r.vol_plus}, {"vol_reldiff", r.vol_reldiff}});
  }
  doc["rows"] = std::move(list);
  return finish(doc, true);
}

json solution_json(const SolveResult& r) {
  json doc = spec_json(r.solution);
  doc["residual"] = r.residual_norm;
  doc["iterations"] = r.iterations;
  doc["converged"] = r.converged;
  return doc;
}

RunResult run_invert(const CommandConfig& config) {
  require_json(config);
  const json input = [&] {
    try {
      return json::parse(read_file(required(config.input_path, "input")));
    } catch (const json::parse_error& e) {
      throw ShapeError(std::string("malformed JSON: ") + e.what());
    }
  }();
  if (!input.is_object() || !input.contains("n") || !input["n"].is_number_integer()) {
    throw ShapeError("invert input needs an integer \"n\"");
  }
  const int n = input["n"].get<int>();
  std::vector<double> target;
  if (input.contains("face_volumes")) {
    target = input["face_volumes"].get<std::vector<double>>();
  } else if (input.contains("squared_lengths")) {
    target = forward_map(simplex_from_json(input.dump()));
  } else {
    throw ShapeError("invert input needs \"face_volumes\" or \"squared_lengths\"");
  }
  if (target.size() != binomial(n + 1, 2)) {
    throw ShapeError("target needs binomial(n+1,2) face volumes");
  }
  const double tol = config.tol.value_or(1e-12);

  std::vector<SolveResult> solutions;
  if (config.starts) {
    ProbeOptions options;
    options.max_iters = config.max_iters;
    options.tol = tol;
    solutions = basin_probe(n, target, *config.starts, config.seed, options);
  } else {
    const SimplexSpec start = input.contains("start")
                                  ? SimplexSpec(n, input["start"].get<std::vector<double>>())
                                  : regular_simplex(n);
    solutions.push_back(solve(InverseProblem{n, target, start, 1e-3, config.max_iters, tol, false}));
  }

  json doc = header("invert");
  doc["n"] = n;
  doc["target"] = target;
  json list = json::array();
  bool any = false;
  for (const SolveResult& r : solutions) {
    list.push_back(solution_json(r));
    any = any || r.converged;
  }
  doc["solutions"] = std::move(list);
  return finish(doc, any);
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("SIMPLEXVOL_OUTPUT_DIR"); dir && *dir) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

}  // namespace

RunResult run(const CommandConfig& config) {
  try {
    if (config.command == "volume") return run_volume(config);
    if (config.command == "faces") return run_faces(config);
    if (config.command == "realizable") return run_realizable(config);
    if (config.command == "jacobian") return run_jacobian(config);
    if (config.command == "spectrum") return run_spectrum(config);
    if (config.command == "counterexample") return run_counterexample(config);
    if (config.command == "invert") return run_invert(config);
    if (config.command == "sweep") return run_sweep(config);
    return {kUsageError, "", "unknown command '" + config.command + "'"};
  } catch (const CertificationError& e) {
    return {kVerificationFailure, "", e.what()};
  } catch (const RealizabilityError& e) {
    return {kVerificationFailure, "", e.what()};
  } catch (const std::exception& e) {
    // file, parse and parameter-domain problems
    return {kUsageError, "", e.what()};
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplex face volumes, Kneser spectra and codimension-2 counterexamples"};
  app.require_subcommand(1);
  CommandConfig config;
  std::string format = "json";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", config.output_path,
                    "Write the report here instead of stdout (relative to $SIMPLEXVOL_OUTPUT_DIR if set)");
  };

  auto* volume = app.add_subcommand("volume", "Cayley-Menger volume of a simplex or one of its faces");
  volume->add_option("--input", config.input_path, "Simplex JSON file")->required();
  volume->add_option("--face", config.face, "Face vertex labels (default: whole simplex)")->delimiter(',');
  add_format(volume);

  auto* faces = app.add_subcommand("faces", "Volumes of all faces of one dimension");
  faces->add_option("--input", config.input_path, "Simplex JSON file")->required();
  faces->add_option("--face-dim", config.face_dim, "Face dimension")->required();
  add_format(faces);

  auto* realizable = app.add_subcommand("realizable", "Gram-matrix realizability certificate");
  realizable->add_option("--input", config.input_path, "Simplex JSON file")->required();
  add_format(realizable);

  auto* jacobian = app.add_subcommand("jacobian", "Codimension-2 Jacobian check: regular point (--n) or a file (--input)");
  auto* jn = jacobian->add_option("--n", config.n, "Dimension of the regular simplex");
  auto* ji = jacobian->add_option("--input", config.input_path, "Simplex JSON file (compare with finite differences)");
  jn->excludes(ji);
  jacobian->add_option("--tol", config.tol, "Deviation tolerance (1e-9 regular, 1e-6 relative for files)");
  add_format(jacobian);

  auto* spectrum = app.add_subcommand("spectrum", "Exact Kneser graph K(n+1,k) spectrum certificate");
  spectrum->add_option("--n", config.n, "n (the ground set has n+1 elements)")->required();
  spectrum->add_option("--k", config.k, "Subset size")->required();
  spectrum->add_option("--max-order", config.max_order, "Size guard on binomial(n+1,k)");
  add_format(spectrum);

  auto* counter = app.add_subcommand("counterexample", "Build and verify the pair T(t0-x), T(t0+x)");
  counter->add_option("--n", config.n, "Dimension (>= 4)")->required();
  counter->add_option("--x", config.x, "Offset from the peak, 0 < x < x_max")->required();
  counter->add_option("--tol", config.tol, "Verification tolerance (default 1e-10)");
  add_format(counter);

  auto* invert = app.add_subcommand("invert", "Recover edge lengths from codimension-2 face volumes");
  invert->add_option("--input", config.input_path,
                     "JSON with \"n\" and \"face_volumes\" or \"squared_lengths\", optional \"start\"")->required();
  invert->add_option("--starts", config.starts, "Random starts for a basin probe");
  invert->add_option("--seed", config.seed, "Seed for random starts");
  invert->add_option("--tol", config.tol, "Residual tolerance (default 1e-12)");
  invert->add_option("--max-iters", config.max_iters, "Iteration cap per solve");
  add_format(invert);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of counterexample pairs over an x grid");
  sweep_cmd->add_option("--n", config.n, "Dimension (>= 4)")->required();
  sweep_cmd->add_option("--points", config.points, "Grid points in (0, x_max)")->check(CLI::PositiveNumber);
  add_format(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "simplexvol: " << e.what() << '\n';
    return kUsageError;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format_given = app.get_subcommands().front()->count("--format") > 0;
  config.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  const RunResult result = run(config);
  if (!result.diagnostic.empty()) {
    err << config.command << ": " << result.diagnostic << '\n';
  }
  if (result.exit_code == kUsageError || result.output.empty()) {
    return result.exit_code;
  }
  if (config.output_path) {
    const std::filesystem::path path = resolve_output(*config.output_path);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << config.command << ": cannot write '" << path.string() << "'\n";
      return kUsageError;
    }
    file << result.output;
  } else {
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace simplexvol::cli
