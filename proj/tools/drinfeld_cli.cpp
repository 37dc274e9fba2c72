#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "drinfeld/commands.hpp"

int main(int argc, char** argv) {
  using drinfeld::ExitCode;
  drinfeld::RunConfig cfg;
  CLI::App app{"Class groups, zeta values, j-invariants and rank 1 Drinfeld modules over function fields"};
  app.add_option("command", cfg.command, drinfeld::command_names())
      ->required()
      ->check(CLI::IsMember({"classgroup", "jtable", "drinfeld", "torsion", "star", "verify"}));
  app.add_option("--curve", cfg.curve_path, "curve file (JSON)");
  app.add_option("--prec", cfg.prec, "certified digits (>= 8)")->default_val(40);
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->default_val(1);
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  app.add_option("--ideal", cfg.ideal, "ideal literal, e.g. \"(x, 2 + y)\"");
  app.add_option("--modulus", cfg.modulus, "modulus literal for torsion, e.g. \"(x)\"");
  app.add_option("--suite", cfg.suite, "verification suite")
      ->check(CLI::IsMember({"all", "zeta", "ideal", "ore", "drinfeld", "hygiene"}))
      ->default_val("all");
  app.add_option("--extra-degrees", cfg.extra_degrees, "degrees summed beyond the certified truncation")->default_val(0);
  std::string report_file;
  app.add_option("--report", report_file, "also write the JSON report to this file");
  app.add_flag("--timing", cfg.timing, "include timings in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }
  drinfeld::CommandResult r = drinfeld::run_command(cfg);
  if (cfg.out == "json")
    std::cout << r.report.dump(2) << "\n";
  else
    std::cout << drinfeld::render_text(r.report);
  if (!report_file.empty()) {
    std::ofstream f(report_file);
    f << r.report.dump(2) << "\n";
  }
  if (r.exit_code != ExitCode::Pass && r.report.contains("error"))
    std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
  return static_cast<int>(r.exit_code);
}
