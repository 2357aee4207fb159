// dimwit: build dimension witnesses, optimize them over quantum realizations,
// compute detection-efficiency thresholds, and test polytope membership.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimwit/classical.hpp"
#include "dimwit/io.hpp"
#include "dimwit/optimizer.hpp"
#include "dimwit/robustness.hpp"

namespace {

using nlohmann::json;

constexpr const char* tool_version = "0.1.0";

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_numeric = 3;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char text[32];
  std::strftime(text, sizeof(text), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return text;
}

int env_thread_cap() {
  const char* raw = std::getenv("DIMWIT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const long parsed = std::strtol(raw, nullptr, 10);
  return parsed > 0 ? static_cast<int>(parsed) : 0;
}

std::string format_value(double value) {
  char text[64];
  std::snprintf(text, sizeof(text), "%.9f", value);
  return text;
}

json make_manifest(const std::string& command, const json& configuration,
                   const json& input_digests, std::uint64_t seed) {
  return json{{"command", command}, {"version", tool_version},
              {"seed", seed},       {"config", configuration},
              {"inputs", input_digests},
              {"timestamp", utc_timestamp()}};
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    dimwit::write_text_file(out_path, content);
    std::cerr << "wrote " << out_path << "\n";
  }
}

struct OptimizerFlags {
  int restarts = 32;
  double epsilon = 0.1;
  int max_iterations = 5000;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  bool real_only = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", restarts, "independent restarts");
    cmd->add_option("--eps", epsilon, "initial step length");
    cmd->add_option("--max-iter", max_iterations, "iteration cap per restart");
    cmd->add_option("--tol", tolerance, "relative stagnation tolerance");
    cmd->add_option("--seed", seed, "base seed for all restart streams");
    cmd->add_flag("--real-only", real_only, "restrict iterates to real entries");
  }

  dimwit::OptimizerConfig to_config() const {
    dimwit::OptimizerConfig config;
    config.restarts = restarts;
    config.epsilon = epsilon;
    config.max_iterations = max_iterations;
    config.tolerance = tolerance;
    config.seed = seed;
    config.real_only = real_only;
    config.threads = env_thread_cap();
    return config;
  }

  json to_json() const {
    return json{{"restarts", restarts},       {"eps", epsilon},
                {"max_iter", max_iterations}, {"tol", tolerance},
                {"seed", seed},               {"real_only", real_only},
                {"threads", env_thread_cap()}};
  }
};

int run_witness_build(int d, const std::string& out_path) {
  const dimwit::WitnessCoefficients witness = dimwit::build_I_witness(d);
  json doc = dimwit::to_json(witness);
  doc["manifest"] = make_manifest("witness build", json{{"d", d}}, json::object(), 0);
  emit(doc.dump(2) + "\n", out_path);
  return exit_ok;
}

int run_optimize(const std::string& witness_path, std::optional<int> d,
                 const std::string& algorithm_name, const OptimizerFlags& flags,
                 const std::string& out_path) {
  if (witness_path.empty() == !d.has_value()) {
    throw dimwit::ValidationError("optimize: give exactly one of a witness file or --d");
  }
  json inputs = json::object();
  dimwit::WitnessCoefficients witness;
  if (!witness_path.empty()) {
    const std::string text = dimwit::read_text_file(witness_path);
    witness = dimwit::witness_from_json(dimwit::parse_json_text(text, witness_path));
    inputs["witness"] = "fnv1a:" + dimwit::fnv1a_hex(text);
  } else {
    witness = dimwit::build_I_witness(*d);
  }

  const dimwit::Algorithm algorithm = algorithm_name == "general"
                                          ? dimwit::Algorithm::general
                                          : dimwit::Algorithm::rank1;
  const dimwit::OptimizationResult result =
      dimwit::multi_restart(algorithm, witness, flags.to_config());

  json configuration = flags.to_json();
  configuration["algorithm"] = algorithm_name;
  if (d) configuration["d"] = *d;
  if (!witness_path.empty()) configuration["witness"] = witness_path;

  json doc = dimwit::to_json(result);
  doc["algorithm"] = algorithm_name;
  doc["manifest"] = make_manifest("optimize", configuration, inputs, flags.seed);
  emit(doc.dump(2) + "\n", out_path);
  return exit_ok;
}

int run_thresholds(int d_min, int d_max, const std::string& format,
                   const std::string& algorithm_name, const OptimizerFlags& flags,
                   const std::string& out_path) {
  if (d_min < 2 || d_min > d_max || d_max > 10) {
    throw dimwit::RangeError("thresholds: need 2 <= d-min <= d-max <= 10");
  }
  const dimwit::Algorithm algorithm = algorithm_name == "general"
                                          ? dimwit::Algorithm::general
                                          : dimwit::Algorithm::rank1;
  const std::vector<dimwit::ThresholdReport> reports =
      dimwit::threshold_sweep(d_min, d_max, flags.to_config(), algorithm);

  json configuration = flags.to_json();
  configuration["d_min"] = d_min;
  configuration["d_max"] = d_max;
  configuration["format"] = format;
  configuration["algorithm"] = algorithm_name;
  const json manifest =
      make_manifest("thresholds", configuration, json::object(), flags.seed);

  if (format == "json") {
    json doc;
    doc["reports"] = json::array();
    for (const dimwit::ThresholdReport& report : reports) {
      doc["reports"].push_back(dimwit::to_json(report));
    }
    doc["manifest"] = manifest;
    emit(doc.dump(2) + "\n", out_path);
  } else {
    emit(dimwit::thresholds_to_csv(reports), out_path);
    if (!out_path.empty()) {
      dimwit::write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    }
  }
  return exit_ok;
}

int run_membership(const std::string& tensor_path, int d, const std::string& out_path) {
  const std::string text = dimwit::read_text_file(tensor_path);
  const dimwit::CorrelationTensor tensor =
      dimwit::tensor_from_json(dimwit::parse_json_text(text, tensor_path));
  const dimwit::MembershipResult result = dimwit::conv_c_membership(tensor, d);

  if (result.feasible) {
    std::cout << "FEASIBLE (" << result.weights.size() << " nonzero weights)\n";
  } else {
    std::cout << "INFEASIBLE (max violation " << format_value(result.residual) << ")\n";
  }

  if (!out_path.empty()) {
    json doc{{"feasible", result.feasible}, {"residual", result.residual}};
    json weights = json::array();
    for (const auto& [index, weight] : result.weights) {
      weights.push_back(json{{"strategy", index}, {"weight", weight}});
    }
    doc["weights"] = std::move(weights);
    doc["manifest"] = make_manifest(
        "membership", json{{"d", d}, {"tensor", tensor_path}},
        json{{"tensor", "fnv1a:" + dimwit::fnv1a_hex(text)}}, 0);
    dimwit::write_text_file(out_path, doc.dump(2) + "\n");
  }
  return result.feasible ? exit_ok : exit_infeasible;
}

int run_eval(const std::string& witness_path, const std::string& tensor_path,
             const std::string& out_path) {
  const std::string witness_text = dimwit::read_text_file(witness_path);
  const dimwit::WitnessCoefficients witness =
      dimwit::witness_from_json(dimwit::parse_json_text(witness_text, witness_path));
  const std::string tensor_text = dimwit::read_text_file(tensor_path);
  const dimwit::CorrelationTensor tensor =
      dimwit::tensor_from_json(dimwit::parse_json_text(tensor_text, tensor_path));

  const double value = dimwit::evaluate(witness, tensor);
  const dimwit::Verdict result = dimwit::verdict(witness, value);
  std::cout << "value " << format_value(value) << "\n"
            << "verdict " << dimwit::to_string(result) << "\n";

  if (!out_path.empty()) {
    json doc{{"value", value}, {"verdict", dimwit::to_string(result)}};
    doc["manifest"] = make_manifest(
        "eval", json{{"witness", witness_path}, {"tensor", tensor_path}},
        json{{"witness", "fnv1a:" + dimwit::fnv1a_hex(witness_text)},
             {"tensor", "fnv1a:" + dimwit::fnv1a_hex(tensor_text)}},
        0);
    dimwit::write_text_file(out_path, doc.dump(2) + "\n");
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"device-independent dimension witnessing under detection loss"};
  app.require_subcommand(1);

  // witness build
  CLI::App* witness_cmd = app.add_subcommand("witness", "witness construction");
  witness_cmd->require_subcommand(1);
  CLI::App* build_cmd =
      witness_cmd->add_subcommand("build", "emit the I_{d+1} witness as JSON");
  int build_d = 2;
  std::string build_out;
  build_cmd->add_option("--d", build_d, "Hilbert dimension the witness targets")
      ->required();
  build_cmd->add_option("--out", build_out, "output path (default: stdout)");

  // optimize
  CLI::App* optimize_cmd =
      app.add_subcommand("optimize", "maximize a witness over quantum realizations");
  std::string optimize_witness;
  std::optional<int> optimize_d;
  std::string optimize_algorithm = "rank1";
  std::string optimize_out;
  OptimizerFlags optimize_flags;
  optimize_cmd->add_option("witness", optimize_witness, "witness JSON file");
  optimize_cmd->add_option("--d", optimize_d,
                           "optimize the built-in I_{d+1} witness instead of a file");
  optimize_cmd->add_option("--algorithm", optimize_algorithm, "general|rank1")
      ->check(CLI::IsMember({"general", "rank1"}));
  optimize_cmd->add_option("--out", optimize_out, "output path (default: stdout)");
  optimize_flags.attach(optimize_cmd);

  // thresholds
  CLI::App* thresholds_cmd = app.add_subcommand(
      "thresholds", "detection-efficiency thresholds per dimension");
  int d_min = 2, d_max = 2;
  std::string thresholds_format = "csv";
  std::string thresholds_algorithm = "rank1";
  std::string thresholds_out;
  OptimizerFlags thresholds_flags;
  thresholds_cmd->add_option("--d-min", d_min, "first dimension")->required();
  thresholds_cmd->add_option("--d-max", d_max, "last dimension")->required();
  thresholds_cmd->add_option("--format", thresholds_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  thresholds_cmd->add_option("--algorithm", thresholds_algorithm, "general|rank1")
      ->check(CLI::IsMember({"general", "rank1"}));
  thresholds_cmd->add_option("--out", thresholds_out, "output path (default: stdout)");
  thresholds_flags.attach(thresholds_cmd);

  // membership
  CLI::App* membership_cmd = app.add_subcommand(
      "membership", "decide membership in the classical polytope Conv C");
  std::string membership_tensor;
  int membership_d = 2;
  std::string membership_out;
  membership_cmd->add_option("tensor", membership_tensor, "correlation JSON file")
      ->required();
  membership_cmd->add_option("--d", membership_d, "classical dimension")->required();
  membership_cmd->add_option("--out", membership_out, "optional result JSON path");

  // eval
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a witness on a correlation file");
  std::string eval_witness, eval_tensor, eval_out;
  eval_cmd->add_option("witness", eval_witness, "witness JSON file")->required();
  eval_cmd->add_option("tensor", eval_tensor, "correlation JSON file")->required();
  eval_cmd->add_option("--out", eval_out, "optional result JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (build_cmd->parsed()) return run_witness_build(build_d, build_out);
    if (optimize_cmd->parsed()) {
      return run_optimize(optimize_witness, optimize_d, optimize_algorithm,
                          optimize_flags, optimize_out);
    }
    if (thresholds_cmd->parsed()) {
      return run_thresholds(d_min, d_max, thresholds_format, thresholds_algorithm,
                            thresholds_flags, thresholds_out);
    }
    if (membership_cmd->parsed()) {
      return run_membership(membership_tensor, membership_d, membership_out);
    }
    if (eval_cmd->parsed()) return run_eval(eval_witness, eval_tensor, eval_out);
    std::cerr << "error: no command\n";
    return exit_usage;
  } catch (const dimwit::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
