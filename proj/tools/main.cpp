#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polyface/polytope_io.hpp"
#include "run.hpp"

namespace {

using polyface::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& m, std::string& f0,
                        std::string& fd1, std::string& fk) {
  cmd->add_option("--d", [&cfg](const std::vector<std::string>& v) {
        cfg.d = v.at(0);
        return true;
      }, "dimension (value or range a..b)");
  cmd->add_option("--n", [&cfg](const std::vector<std::string>& v) {
        cfg.n = v.at(0);
        return true;
      }, "vertex count (value, range a..b, or comma list)");
  cmd->add_option("--k", [&cfg](const std::vector<std::string>& v) {
        cfg.k = v.at(0);
        return true;
      }, "face dimension (value or range a..b)");
  cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count");
  cmd->add_option("--seed", cfg.seed, "random stream seed");
  cmd->add_option("--tolerance", cfg.tolerance, "ambiguity tolerance override");
  cmd->add_option("--subspace", [&cfg](const std::vector<std::string>& v) {
        cfg.subspace = v.at(0);
        return true;
      }, "coordinate axes (e3,e4) or a file of 2 rational basis rows");
  cmd->add_option("--polytope", [&cfg](const std::vector<std::string>& v) {
        cfg.polytope = v.at(0);
        return true;
      }, "fixture name (cube, square, triangle, simplex, crosspolytope, cyclic) or file path");
  cmd->add_option("--format", cfg.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out, "write the report to a file instead of stdout");
  cmd->add_option("--m", m, "codimension (estimate gamma) or facet count (bounds)");
  cmd->add_option("--f0", f0, "vertex count input for ratio bounds");
  cmd->add_option("--fd1", fd1, "facet count input for ratio bounds");
  cmd->add_option("--fk", fk, "actual face count, to mark bounds satisfied");
  cmd->add_flag("--improved", cfg.improved, "use the additive-term improved bounds");
  cmd->add_option("--face-dim", cfg.face_dim, "dimension of the target face");
  cmd->add_option("--face-index", cfg.face_index, "index of the target face at that dimension");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face-number verification toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string m_raw, f0_raw, fd1_raw, fk_raw;

  CLI::App* tabulate = app.add_subcommand("tabulate", "cyclic f-vectors, rho values, residuals");
  CLI::App* verify = app.add_subcommand("verify", "exact identity suites");
  CLI::App* estimate = app.add_subcommand("estimate", "Monte Carlo angle estimates and checks");
  CLI::App* bounds = app.add_subcommand("bounds", "face-number lower bound calculators");
  CLI::App* tightness = app.add_subcommand("tightness", "exact ratio-vs-limit residual table");

  std::string verify_which, estimate_which, bounds_which;
  verify->add_option("check", verify_which, "lemma31 | gale | prop43 | remark | euler")
      ->required();
  estimate->add_option("check", estimate_which,
                       "phi | gamma | feldman | deficiency | prop41 | thm24")
      ->required();
  bounds->add_option("check", bounds_which, "barnette | hinman | gubc")->required();

  for (CLI::App* cmd : {tabulate, verify, estimate, bounds, tightness})
    add_common_options(cmd, cfg, m_raw, f0_raw, fd1_raw, fk_raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (tabulate->parsed()) cfg.command = "tabulate";
    if (verify->parsed()) {
      cfg.command = "verify";
      cfg.subcommand = verify_which;
    }
    if (estimate->parsed()) {
      cfg.command = "estimate";
      cfg.subcommand = estimate_which;
    }
    if (bounds->parsed()) {
      cfg.command = "bounds";
      cfg.subcommand = bounds_which;
    }
    if (tightness->parsed()) cfg.command = "tightness";

    auto parse_big = [](const std::string& raw, const char* what) {
      try {
        return polyface::Int(raw);
      } catch (const std::exception&) {
        throw polyface::cli::UsageError(std::string("bad value for --") + what + ": " + raw);
      }
    };
    if (!m_raw.empty()) cfg.m = parse_big(m_raw, "m");
    if (!f0_raw.empty()) cfg.f0 = parse_big(f0_raw, "f0");
    if (!fd1_raw.empty()) cfg.fd1 = parse_big(fd1_raw, "fd1");
    if (!fk_raw.empty()) cfg.fk = parse_big(fk_raw, "fk");

    const polyface::cli::RunResult result = polyface::cli::run_command(cfg);
    const std::string text = cfg.format == "json"
                                 ? polyface::cli::render_json(result.report)
                                 : polyface::cli::render_csv(result.report);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw polyface::cli::UsageError("cannot open --out file: " + cfg.out);
      out << text;
    }
    return result.exit_code;
  } catch (const polyface::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polyface::polytope::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
