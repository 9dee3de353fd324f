#include "cli.hpp"

#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "pipeline.hpp"
#include "rpm/rational_poly.hpp"

namespace rpm::harness {
namespace {

struct Overrides {
  std::string config_file;
  std::optional<std::string> lambda, weight, window, format, out, outputs;
  std::optional<int> d, dmax, digits;
};

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config_file.empty() ? RunConfig{} : RunConfig::from_json_file(o.config_file);
  if (o.lambda) c.lambda = *o.lambda;
  if (o.weight) c.weight = *o.weight;
  if (o.d) c.d = *o.d;
  if (o.dmax) c.d_max = *o.dmax;
  if (o.digits) c.digits = *o.digits;
  if (o.format) c.format = *o.format;
  if (o.out) c.out_dir = *o.out;
  if (o.window) {
    const auto comma = o.window->find(',');
    if (comma == std::string::npos) throw ConfigError("window", "expected lo,hi");
    c.window_lo = o.window->substr(0, comma);
    c.window_hi = o.window->substr(comma + 1);
  }
  if (o.outputs) {
    c.outputs.clear();
    std::string rest = *o.outputs;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      c.outputs.push_back(rest.substr(0, comma));
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    }
  }
  c.validate();
  return c;
}

void add_run_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_file, "JSON config file; flags override its fields");
  cmd->add_option("--lambda", o.lambda, "field strength, rational (e.g. 1, 1/2, 0.25)");
  cmd->add_option("--weight", o.weight, "box-walls | half-line");
  cmd->add_option("--d", o.d, "Hankel offset d >= 0");
  cmd->add_option("--dmax", o.dmax, "largest determinant dimension D");
  cmd->add_option("--digits", o.digits, "working decimal digits (default 30 + 3 dmax)");
  cmd->add_option("--window", o.window, "scan window lo,hi (default 0,200)");
  cmd->add_option("--format", o.format, "table format: csv | json");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--outputs", o.outputs, "comma list of table, sequences, figure-data");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riccati-Pade eigenvalues of Y'' + (eps - lambda x) Y = 0"};
  app.require_subcommand(1);

  Overrides run_o;
  CLI::App* run_cmd = app.add_subcommand("run", "compute root sequences, tables and reports");
  add_run_flags(run_cmd, run_o);

  std::string fig_name;
  std::string fig_dir = RunConfig{}.out_dir;
  bool fig_svg = false;
  CLI::App* fig_cmd = app.add_subcommand("figure", "emit figure data (fig1, fig2, fig3) from a run directory");
  fig_cmd->add_option("which", fig_name, "fig1 | fig2 | fig3")->required();
  fig_cmd->add_option("--out", fig_dir, "run directory");
  fig_cmd->add_flag("--svg", fig_svg, "also write <which>.svg");

  std::string or_lambda = "1", or_model = "bounded";
  int or_count = 4, or_digits = 30;
  CLI::App* or_cmd = app.add_subcommand("oracle", "exact eigenvalues from the Airy quantization conditions");
  or_cmd->add_option("--lambda", or_lambda, "field strength, rational");
  or_cmd->add_option("--model", or_model, "bounded | unbounded");
  or_cmd->add_option("--count", or_count, "number of eigenvalues");
  or_cmd->add_option("--digits", or_digits, "decimal digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      const RunConfig config = resolve(run_o);
      out << run(config);
      return kExitOk;
    }
    if (*fig_cmd) {
      const Figure which = parse_figure(fig_name);
      const FigureData fig = figure_from_run_dir(fig_dir, which);
      const std::string csv = figure_csv(fig);
      {
        std::ofstream f(std::filesystem::path(fig_dir) / (fig_name + ".csv"), std::ios::binary);
        f << csv;
      }
      if (fig_svg) {
        std::ofstream f(std::filesystem::path(fig_dir) / (fig_name + ".svg"), std::ios::binary);
        f << figure_svg(fig);
      }
      out << csv;
      return kExitOk;
    }
    if (*or_cmd) {
      mpq_class lambda;
      try {
        lambda = parse_rational(or_lambda);
      } catch (const std::exception&) {
        throw ConfigError("lambda", "not a rational number: \"" + or_lambda + "\"");
      }
      if (or_model != "bounded" && or_model != "unbounded") throw ConfigError("model", "must be bounded or unbounded");
      if (or_model == "unbounded" && lambda <= 0) throw ConfigError("lambda", "the half-line spectrum needs lambda > 0");
      if (or_count < 1) throw ConfigError("count", "must be >= 1");
      if (or_digits < 5 || or_digits > 2000) throw ConfigError("digits", "must lie in [5, 2000]");
      const Model model = or_model == "bounded" ? Model::Bounded : Model::Unbounded;
      const auto evs = model == Model::Bounded && lambda == 0 ? closed_form_box_eigenvalues(or_count, or_digits)
                                                              : oracle_eigenvalues(model, lambda, or_count, or_digits);
      out << "n,eps,residual\n";
      for (const auto& ev : evs) {
        out << ev.n << "," << ev.eps.to_string(or_digits) << ","
            << (ev.residual.is_zero() ? std::string("0") : ev.residual.to_scientific(3)) << "\n";
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitConfig;
}

}  // namespace rpm::harness
