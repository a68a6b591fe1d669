#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adscmc/io.hpp"
#include "run.hpp"

namespace adscmc::cli {

namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  throw CLI::ValidationError("config", "unsupported value " + v.dump());
}

// Options not given on the command line take their value from the config file.
void merge_config(CLI::App* sub, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CLI::ValidationError("--config", "top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "config") continue;
    CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option("--" + it.key());
    } catch (const CLI::OptionNotFound&) {
      throw CLI::ValidationError("--config", "unknown key '" + it.key() + "'");
    }
    if (opt->count() > 0) continue;
    if (it.value().is_array()) {
      for (const auto& v : it.value()) opt->add_result(scalar_text(v));
    } else {
      opt->add_result(scalar_text(it.value()));
    }
    opt->run_callback();
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timelike cmc and minimal surface builder and verifier", "adscmc"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> tol_overrides;

  const std::map<std::string, Assembly> actions{{"mu", Assembly::Mu}, {"nu", Assembly::Nu}};
  const std::map<std::string, Pole> poles{{"plus", Pole::Plus}, {"minus", Pole::Minus}};

  auto common = [&](CLI::App* s) {
    s->add_option("--config", config_path, "JSON file of option values; flags win");
    s->add_option("--u0", cfg.domain.u0, "Domain lower u");
    s->add_option("--u1", cfg.domain.u1, "Domain upper u");
    s->add_option("--v0", cfg.domain.v0, "Domain lower v");
    s->add_option("--v1", cfg.domain.v1, "Domain upper v");
    s->add_option("--nu", cfg.nu, "Grid points in u");
    s->add_option("--nv", cfg.nv, "Grid points in v");
    s->add_flag("--flip", cfg.flip, "Reverse the normal orientation");
    s->add_option("--pole", cfg.pole, "Projection pole for OBJ output")
        ->transform(CLI::CheckedTransformer(poles, CLI::ignore_case));
    s->add_option("--out", cfg.outputs, "Output file (.obj, .json, .csv); repeatable");
    s->add_option("--report", cfg.report_path, "Write the JSON summary here too");
    s->add_option("--tol", tol_overrides, "Tolerance override name=value; repeatable");
  };
  auto weierstrass = [&](CLI::App* s) {
    s->add_option("--q", cfg.q, "q(u)");
    s->add_option("--f", cfg.f, "f(u)");
    s->add_option("--r", cfg.r, "r(v)");
    s->add_option("--g", cfg.g, "g(v)");
  };
  auto lax = [&](CLI::App* s) {
    s->add_option("--omega", cfg.omega, "omega(u, v)");
    s->add_option("--H", cfg.H, "Constant mean curvature");
    s->add_option("--Q", cfg.Q, "Q(u)");
    s->add_option("--R", cfg.R, "R(v)");
  };

  CLI::App* minimal = app.add_subcommand("minimal", "Weierstrass minimal surface in E^3_1");
  common(minimal);
  weierstrass(minimal);

  CLI::App* cmc1 = app.add_subcommand("cmc1", "Bryant-type cmc 1 surface in H^3_1");
  common(cmc1);
  weierstrass(cmc1);
  cmc1->add_option("--action", cfg.action, "mu or nu")
      ->transform(CLI::CheckedTransformer(actions, CLI::ignore_case));

  CLI::App* laxc = app.add_subcommand("lax", "Integrate the Lax system for (omega, H, Q, R)");
  common(laxc);
  lax(laxc);
  laxc->add_option("--action", cfg.action, "mu or nu")
      ->transform(CLI::CheckedTransformer(actions, CLI::ignore_case));

  CLI::App* verify = app.add_subcommand("verify", "Geometry report of a surface JSON file");
  common(verify);
  verify->add_option("--in", cfg.input, "Surface JSON");

  CLI::App* gauss = app.add_subcommand("gauss", "Gauss map grids and holomorphicity classification");
  common(gauss);
  lax(gauss);
  gauss->add_option("--gallery", cfg.name, "Gallery surface instead of Lax data");
  gauss->add_option("--sign", cfg.sign, "plus or minus")
      ->transform(CLI::CheckedTransformer(poles, CLI::ignore_case));

  CLI::App* project = app.add_subcommand("project", "Re-project a surface JSON file");
  common(project);
  project->add_option("--in", cfg.input, "Surface JSON");

  CLI::App* gal = app.add_subcommand("gallery", "Build and verify a closed-form example");
  common(gal);
  gal->add_option("name", cfg.name, "Gallery entry")->required();

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) merge_config(sub, config_path);
    cfg.command = sub->get_name();
    for (const auto& t : tol_overrides) {
      auto eq = t.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--tol", "expected name=value: " + t);
      double value;
      try {
        value = std::stod(t.substr(eq + 1));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--tol", "bad value in " + t);
      }
      try {
        set_tolerance(cfg.tol, t.substr(0, eq), value);
      } catch (const std::exception& e) {
        throw CLI::ValidationError("--tol", e.what());
      }
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }
  return run_command(cfg, out, err);
}

}  // namespace adscmc::cli
