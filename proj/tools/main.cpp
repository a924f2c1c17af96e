// Command-line front end: scenario verification, Maxwell solving, 3-form
// classification, Ricci computation, and the built-in demos.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sugra47/scenario.hpp"

using namespace sugra47;

namespace {

struct CommonOpts {
  std::string mode = "exact";
  double tolerance = 1e-9;
  std::string out_path;
  std::string report_format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "arithmetic mode: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tolerance", opts.tolerance, "float-mode comparison tolerance");
  cmd->add_option("--out", opts.out_path, "write the JSON report to a file");
  cmd->add_option("--report", opts.report_format, "stdout format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

int emit(const RunResult& result, const CommonOpts& opts) {
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << opts.out_path << "\n";
      return 3;
    }
    out << result.report.dump(2) << "\n";
  }
  if (opts.report_format == "json")
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << render_text(result.report);
  return result.exit_code;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw structural_error("malformed JSON in '" + path + "': " + e.what());
  }
}

int run_scenario_command(const std::string& path, const std::string& forced_task,
                         const CommonOpts& opts) {
  Json j = load_json(path);
  Scenario s = scenario_from_json(j, opts.mode == "float", opts.tolerance);
  if (!forced_task.empty()) s.tasks = {forced_task};
  return emit(run_tasks(s), opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior-calculus verification of 4+7 split supergravity backgrounds"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file, demo_name;

  auto* verify = app.add_subcommand("verify", "run the verification tasks of a scenario file");
  verify->add_option("file", file, "scenario JSON")->required();
  add_common(verify, opts);

  auto* maxwell = app.add_subcommand("solve-maxwell", "invariant Maxwell spectrum of a scenario");
  maxwell->add_option("file", file, "scenario JSON")->required();
  add_common(maxwell, opts);

  auto* classify_cmd = app.add_subcommand("classify-form", "orbit type of a 3-form on R^7");
  classify_cmd->add_option("file", file, "JSON with {schema: 1, form: ...}")->required();
  add_common(classify_cmd, opts);

  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci tensor of a scenario's metric");
  ricci_cmd->add_option("file", file, "scenario JSON")->required();
  add_common(ricci_cmd, opts);

  auto* demo = app.add_subcommand("demo", "run a built-in scenario");
  demo->add_option("name", demo_name, "demo name (see list-demos)")->required();
  add_common(demo, opts);

  auto* list = app.add_subcommand("list-demos", "print the built-in scenario names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& n : demo_names()) std::cout << n << "\n";
      return 0;
    }
    if (demo->parsed()) return emit(run_demo(demo_name, opts.mode == "float", opts.tolerance), opts);
    if (verify->parsed()) return run_scenario_command(file, "", opts);
    if (maxwell->parsed()) return run_scenario_command(file, "solve-maxwell", opts);
    if (ricci_cmd->parsed()) return run_scenario_command(file, "ricci", opts);
    if (classify_cmd->parsed()) {
      Json j = load_json(file);
      if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw structural_error("classify-form: missing or unsupported schema");
      if (!j.contains("form")) throw structural_error("classify-form: missing form");
      Frame r7 = Frame::euclidean(7);
      KForm form = kform_from_json(j.at("form"), r7);
      ToleranceConfig tol{opts.tolerance, opts.tolerance};
      RunResult result;
      result.report["classification"] = orbit_to_json(classify(form, tol));
      return emit(result, opts);
    }
  } catch (const structural_error& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
