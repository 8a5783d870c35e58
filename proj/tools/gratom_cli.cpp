// Command-line front end; links only the public C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gratom.h"

namespace {

struct CommonOpts {
  std::string format;
  std::string out;
  std::string curvature_mode;
  std::string constants_path;
  std::string axis_permutation;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "Output format: csv or json");
  cmd->add_option("--out", opts->out, "Output path ('-' = stdout)");
  cmd->add_option("--curvature-mode", opts->curvature_mode,
                  "leading_orthonormal or exact_printed");
  cmd->add_option("--constants", opts->constants_path,
                  "File of constant overrides (key = value lines)");
  cmd->add_option("--axis-permutation", opts->axis_permutation,
                  "Three axis labels, e.g. \"3 1 2\"");
}

int append_constants(const CommonOpts& opts, std::string* cfg) {
  if (opts.constants_path.empty()) return 0;
  std::ifstream f(opts.constants_path);
  if (!f) {
    std::cerr << "error: cannot open constants file '" << opts.constants_path
              << "'\n";
    return 1;
  }
  *cfg += "[constants]\n";
  std::string line;
  while (std::getline(f, line)) *cfg += line + "\n";
  return 0;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run_config(const std::string& cfg, const CommonOpts& opts) {
  const char* out = opts.out.empty() ? "-" : opts.out.c_str();
  const char* fmt = opts.format.empty() ? nullptr : opts.format.c_str();
  const int rc = gratom_sweep_run_text(cfg.c_str(), out, fmt);
  if (rc == GRATOM_OK) return 0;
  std::cerr << "error: " << gratom_last_error() << "\n";
  return rc == GRATOM_ERR_PARSE ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gratom: first-order curvature corrections to hydrogenic energy "
      "levels in a Schwarzschild background"};
  app.require_subcommand(1);

  struct {
    std::vector<double> masses{0.0};
    std::vector<double> radii{1.0};
    std::vector<std::string> states{"1 0 0"};
    double b0 = 0.0;
    double e0 = 0.0;
    CommonOpts common;
  } o;

  auto add_grid = [&](CLI::App* cmd, bool states) {
    cmd->add_option("--mass,-M", o.masses, "Central mass(es), g");
    cmd->add_option("--radius,-r", o.radii, "Atom radius(es), cm");
    if (states)
      cmd->add_option("--state,-s", o.states,
                      "State 'n l m_l' ('all' allowed for l and m_l)");
    else
      cmd->add_option("--n,-n", o.states, "Principal quantum number(s)");
    add_common(cmd, &o.common);
  };

  CLI::App* bare = app.add_subcommand("bare", "Bare-atom corrections");
  add_grid(bare, true);
  CLI::App* zeeman = app.add_subcommand("zeeman", "Normal Zeeman corrections");
  add_grid(zeeman, true);
  zeeman->add_option("--b0", o.b0, "Magnetic field, G")->required();
  CLI::App* stark = app.add_subcommand("stark", "Stark corrections");
  add_grid(stark, true);
  stark->add_option("--e0", o.e0, "Electric field, statV/cm")->required();
  CLI::App* semi =
      app.add_subcommand("semiclassical", "Bohr-quantized orbit radii");
  add_grid(semi, false);
  semi->add_option("--b0", o.b0, "Magnetic field, G");

  std::string config_path;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a sweep from a config file");
  sweep->add_option("--config", config_path, "Sweep config path")->required();
  add_common(sweep, &o.common);

  CLI11_PARSE(app, argc, argv);

  if (sweep->parsed()) {
    std::ifstream f(config_path);
    if (!f) {
      std::cerr << "error: cannot open config file '" << config_path << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    std::string cfg = ss.str() + "\n";
    if (append_constants(o.common, &cfg)) return 1;
    return run_config(cfg, o.common);
  }

  std::string mode = app.get_subcommands().front()->get_name();
  std::string cfg = "mode = " + mode + "\n";
  cfg += "masses = ";
  for (size_t i = 0; i < o.masses.size(); ++i)
    cfg += (i ? ", " : "") + num(o.masses[i]);
  cfg += "\nradii = ";
  for (size_t i = 0; i < o.radii.size(); ++i)
    cfg += (i ? ", " : "") + num(o.radii[i]);
  cfg += "\nstates = ";
  for (size_t i = 0; i < o.states.size(); ++i)
    cfg += (i ? "; " : "") + o.states[i];
  cfg += "\n";
  if (zeeman->parsed() || semi->parsed()) cfg += "b0 = " + num(o.b0) + "\n";
  if (stark->parsed()) cfg += "e0 = " + num(o.e0) + "\n";
  if (!o.common.curvature_mode.empty())
    cfg += "curvature_mode = " + o.common.curvature_mode + "\n";
  if (!o.common.axis_permutation.empty())
    cfg += "axis_permutation = " + o.common.axis_permutation + "\n";
  if (append_constants(o.common, &cfg)) return 1;
  return run_config(cfg, o.common);
}
