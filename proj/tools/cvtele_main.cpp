// Command-line front end: cvtele <command> [flags]

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "cvtele/report.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"resource", "resource family (comma list for sweep): twin_beam, squeezed_number, photon_added, photon_subtracted, squeezed_bell"},
    {"input", "input family (comma list for sweep): coherent, squeezed_vacuum, fock1, photon_added_coherent, squeezed_fock1"},
    {"r", "resource squeezing modulus"},
    {"phi", "resource squeezing phase (accepts pi, pi/k, k*pi)"},
    {"delta", "Bell angle"},
    {"theta", "Bell phase"},
    {"beta", "coherent amplitude, 're' or 're,im'"},
    {"s", "input squeezing modulus"},
    {"varphi", "input squeezing phase"},
    {"grid", "r grid, 'start:stop:step' or 'x1,x2,...'"},
    {"tol", "quadrature tolerance"},
    {"cutoff", "starting Fock cutoff"},
    {"method", "fidelity method: moment, quadrature or both"},
    {"gain", "largest pump gain for plan"},
    {"out", "output file (stdout when omitted)"},
    {"format", "csv or json"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-variable teleportation with non-Gaussian resources"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_opts;
  for (const auto& f : kFlags) {
    flag_opts[f.name] = app.add_option(std::string("--") + f.name, flag_values[f.name], f.help);
  }
  std::string config_path;
  app.add_option("--config", config_path, "flat JSON settings file; flags override it");

  std::string figure_id;
  for (const char* name : {"fidelity", "sweep", "optimize", "metrics", "plan", "figure"}) {
    CLI::App* sub = app.add_subcommand(name);
    if (std::string(name) == "figure") {
      sub->add_option("id", figure_id,
                      "fig1 fig2 fig3 fig4 fig5 fig6 fig7_deltaF fig8 fig9_affinity")
          ->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cvtele::kExitOk : cvtele::kExitConfig;
  }

  try {
    const cvtele::Command command = cvtele::parse_command(app.get_subcommands().front()->get_name());
    std::map<std::string, std::string> settings;
    if (!config_path.empty()) settings = cvtele::read_config_file(config_path);
    for (const auto& [name, opt] : flag_opts) {
      if (opt->count() > 0) settings[name] = flag_values[name];
    }
    if (command == cvtele::Command::Figure) settings["figure"] = figure_id;
    const cvtele::RunConfig cfg = cvtele::make_run_config(command, settings);
    return cvtele::run_config(cfg, std::cout, std::cerr);
  } catch (const cvtele::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return cvtele::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cvtele::kExitConfig;
  }
}
