#ifndef ADSCMC_TOOLS_RUN_HPP
#define ADSCMC_TOOLS_RUN_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"
#include "adscmc/weierstrass.hpp"

namespace adscmc::cli {

struct RunConfig {
  std::string command;  // minimal, cmc1, lax, verify, gauss, project, gallery
  std::string name;     // gallery entry
  std::string q = "u", f = "1", r = "v", g = "1";
  std::string omega, H = "1", Q, R;
  Domain domain;
  int nu = 101, nv = 101;
  Assembly action = Assembly::Mu;
  Pole sign = Pole::Plus;
  Pole pole = Pole::Plus;
  bool flip = false;
  std::string input;
  std::vector<std::string> outputs;  // format from the extension
  std::string report_path;
  Tolerances tol;
};

// Throws UnknownName for an unknown tolerance.
void set_tolerance(Tolerances& tol, const std::string& name, double value);
const std::map<std::string, double Tolerances::*>& tolerance_fields();

enum Exit : int { Ok = 0, CheckFailed = 1, Usage = 2, ComputeError = 3 };

// Prints a JSON summary to out, diagnostics and the worst failing check to err.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Flag parsing, config file merge and dispatch.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adscmc::cli

#endif
