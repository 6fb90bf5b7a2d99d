#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vdwx/config.hpp"
#include "vdwx/dataset.hpp"
#include "vdwx/errors.hpp"
#include "vdwx/oracle.hpp"
#include "vdwx/version.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string output_path;
  std::string format;
  std::optional<int> points;
  std::optional<double> min;
  std::optional<double> max;
};

void add_output_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--output", o.output_path,
                  "write the dataset here instead of standard output");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_sweep_overrides(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--points", o.points, "override sweep point count");
  cmd->add_option("--min", o.min, "override sweep minimum");
  cmd->add_option("--max", o.max, "override sweep maximum");
}

// Returns 0, or 2 when the dataset records non-converged points.
int emit(const vdwx::SweepResult& result, vdwx::OutputFormat format,
         const std::string& output_path) {
  std::ostringstream buffer;
  if (format == vdwx::OutputFormat::csv) {
    vdwx::write_csv(result, buffer);
  } else {
    vdwx::write_json(result, buffer);
  }
  if (output_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      throw vdwx::ConfigError("cannot open output file: " + output_path);
    }
    out << buffer.str();
  }
  if (result.nonconvergent) {
    std::cerr << "warning: some points did not converge and were skipped\n";
    return 2;
  }
  return 0;
}

vdwx::OutputFormat resolve_format(const std::string& flag,
                                  vdwx::OutputFormat fallback) {
  if (flag == "csv") return vdwx::OutputFormat::csv;
  if (flag == "json") return vdwx::OutputFormat::json;
  return fallback;
}

int run_problem(vdwx::ProblemKind kind, const CommonOpts& o) {
  std::ifstream in(o.config_path, std::ios::binary);
  if (!in) {
    throw vdwx::ConfigError("cannot read config file: " + o.config_path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  vdwx::RunConfig cfg = vdwx::parse_config(text.str());
  if (cfg.problem != kind) {
    throw vdwx::ConfigError(std::string("config selects problem '") +
                            vdwx::to_string(cfg.problem) +
                            "' but the subcommand is '" +
                            vdwx::to_string(kind) + "'");
  }

  if (o.points || o.min || o.max) {
    if (!cfg.sweep) {
      throw vdwx::ConfigError(
          "--points/--min/--max need a sweep block in the config");
    }
    if (o.points) cfg.sweep->points = *o.points;
    if (o.min) cfg.sweep->min = *o.min;
    if (o.max) cfg.sweep->max = *o.max;
    // Re-validate the overridden sweep through the schema path.
    cfg = vdwx::parse_config(vdwx::serialize_config(cfg));
  }

  return emit(vdwx::run_sweep(cfg), resolve_format(o.format, cfg.output),
              o.output_path);
}

int run_figure(const std::string& which, double gamma_ratio,
               bool gamma_ratio_set, const CommonOpts& o) {
  vdwx::FigureOverrides ov;
  ov.points = o.points;
  ov.min = o.min;
  ov.max = o.max;
  if (gamma_ratio_set) ov.gamma_ratio = gamma_ratio;
  return emit(vdwx::figure_dataset(which, ov),
              resolve_format(o.format, vdwx::OutputFormat::csv),
              o.output_path);
}

int run_verify() {
  const auto checks = vdwx::provenance_checks();
  bool all_pass = true;
  std::printf("%-36s %22s %22s %10s %9s  %s\n", "check", "computed",
              "reference", "rel_gap", "tol", "status");
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    std::printf("%-36s %22.15g %22.15g %10.3e %9.1e  %s\n", c.name.c_str(),
                c.computed, c.reference, c.rel_gap, c.tol,
                c.pass ? "pass" : "FAIL");
  }
  std::printf("%zu checks, %s\n", checks.size(),
              all_pass ? "all pass" : "FAILURES PRESENT");
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dispersion interactions of excited two-level atoms and media"};
  app.set_version_flag("--version", vdwx::version_string);
  app.require_subcommand(1);

  CommonOpts opts;
  std::string which;
  double gamma_ratio = 0.02;

  const char* problem_help[] = {
      "near-zone pair level shift and induced width",
      "atom above a dilute half space",
      "force per area between two dilute half spaces, both force laws",
      "Lifshitz force: imaginary-axis quadrature vs closed form"};
  CLI::App* problem_cmds[4];
  const vdwx::ProblemKind kinds[] = {
      vdwx::ProblemKind::pair, vdwx::ProblemKind::surface,
      vdwx::ProblemKind::media, vdwx::ProblemKind::lifshitz};
  const char* names[] = {"pair", "surface", "media", "lifshitz"};
  for (int i = 0; i < 4; ++i) {
    CLI::App* cmd = app.add_subcommand(names[i], problem_help[i]);
    cmd->add_option("--config", opts.config_path, "JSON config file")
        ->required();
    add_output_options(cmd, opts);
    add_sweep_overrides(cmd, opts);
    problem_cmds[i] = cmd;
  }

  CLI::App* figure =
      app.add_subcommand("figure", "published sweep datasets by identifier");
  figure
      ->add_option("--which", which,
                   "figure identifier: 4a, 4b, 5, 6, 7, 7a, 7b")
      ->required();
  figure->add_option("--gamma-ratio", gamma_ratio,
                     "width of the medium species over its frequency");
  add_output_options(figure, opts);
  add_sweep_overrides(figure, opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute frozen constants and print per-check gaps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (int i = 0; i < 4; ++i) {
      if (problem_cmds[i]->parsed()) return run_problem(kinds[i], opts);
    }
    if (figure->parsed()) {
      return run_figure(which, gamma_ratio,
                        figure->count("--gamma-ratio") > 0, opts);
    }
    if (verify->parsed()) return run_verify();
    return 1;
  } catch (const vdwx::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const vdwx::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const vdwx::NotApplicable& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const vdwx::PoleOnAxis& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const vdwx::QuadratureNonConvergent& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
