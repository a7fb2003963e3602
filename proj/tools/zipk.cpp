// zipk: K_0 of G-zips of fixed type from the command line.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zipk/error.hpp"
#include "zipk/report.hpp"

namespace {

struct Flags {
  std::string job_file;
  std::string group, mu, checks, twist, format, out, module;
  std::optional<long> p, window;
  std::optional<std::uint32_t> max_degree;
};

zipk::JobSpec build_job(const Flags& f) {
  zipk::JobSpec job;
  if (!f.job_file.empty()) job = zipk::load_job_file(f.job_file);
  if (!f.group.empty()) {
    job.preset = f.group;
    job.explicit_group.reset();
  }
  if (!f.mu.empty()) job.mu = zipk::parse_int_list(f.mu);
  if (f.p) job.p = *f.p;
  if (!f.checks.empty()) job.checks = zipk::parse_checks(f.checks);
  if (f.window) {
    if (*f.window < 0) throw zipk::ParseError("window must be non-negative");
    job.window = f.window;
  }
  if (!f.twist.empty()) job.twist = zipk::parse_int_matrix(f.twist);
  if (!f.format.empty()) {
    if (f.format != "json" && f.format != "text") throw zipk::ParseError("format must be json or text");
    job.format = f.format;
  }
  if (!f.out.empty()) job.output = f.out;
  if (f.max_degree) job.max_degree = *f.max_degree;
  if (!f.module.empty()) job.module = zipk::parse_module(f.module);
  return job;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw zipk::ParseError("cannot write " + *path);
  out << text;
}

std::string format_report(const zipk::Json& report, const std::string& format) {
  return format == "text" ? zipk::render_text(report) : report.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_0 of G-zips: R(L)/IR(L) with Z-module invariants and cross-checks"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("job", f.job_file, "JSON or TOML job file");
    cmd->add_option("--group", f.group, "preset: SL2 SL3 SL4 GL2 GL3 Sp4 PGL2 Gm Gm^2 A1xA1");
    cmd->add_option("--format", f.format, "json or text");
    cmd->add_option("--out", f.out, "output path (default stdout)");
  };
  auto add_datum = [&](CLI::App* cmd) {
    cmd->add_option("--mu", f.mu, "cocharacter, comma separated");
    cmd->add_option("--p", f.p, "prime");
    cmd->add_option("--twist", f.twist, "Frobenius twist matrix, rows split by ';'");
    cmd->add_option("--max-degree", f.max_degree, "Groebner degree cap");
  };

  std::vector<std::pair<std::string, CLI::App*>> commands;
  auto* validate = app.add_subcommand("validate", "check the root datum and the simply connected gate");
  add_common(validate);
  add_datum(validate);
  auto* k0 = app.add_subcommand("k0", "R(L)/IR(L) with checks");
  add_common(k0);
  add_datum(k0);
  k0->add_option("--checks", f.checks, "kunneth,theta,hecke,steinberg,counterexample | all | none");
  k0->add_option("--window", f.window, "exponent bound for window checks");
  k0->add_option("--module", f.module, "module for the counterexample check: Z or Z/n");
  auto* torus = app.add_subcommand("k0-torus", "R(T)/IR(T)");
  add_common(torus);
  add_datum(torus);
  auto* hecke = app.add_subcommand("hecke-check", "compare Hecke, Weyl and generator-span invariants");
  add_common(hecke);
  hecke->add_option("--window", f.window, "exponent bound");
  auto* demo = app.add_subcommand("demo-counterexample", "W-invariants exceeding the image of M");
  demo->add_option("--module", f.module, "Z or Z/n (default Z/2)");
  demo->add_option("--format", f.format, "json or text");
  demo->add_option("--out", f.out, "output path (default stdout)");
  std::string report_file;
  auto* render = app.add_subcommand("render", "re-render a JSON report as text");
  render->add_option("report", report_file, "JSON report")->required();
  render->add_option("--out", f.out, "output path (default stdout)");
  for (auto* c : {validate, k0, torus, hecke, demo}) commands.emplace_back(c->get_name(), c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? zipk::kExitOk : zipk::kExitParse;
  }

  try {
    if (render->parsed()) {
      std::ifstream in(report_file);
      if (!in) throw zipk::ParseError("cannot read " + report_file);
      zipk::Json report;
      try {
        report = zipk::Json::parse(in);
      } catch (const zipk::Json::parse_error& e) {
        throw zipk::ParseError(e.what());
      }
      emit(zipk::render_text(report), f.out.empty() ? std::nullopt : std::optional(f.out));
      return zipk::kExitOk;
    }
    for (const auto& [name, cmd] : commands) {
      if (!cmd->parsed()) continue;
      const zipk::JobSpec job = build_job(f);
      const zipk::Json report = zipk::run_job(name, job);
      emit(format_report(report, job.format), job.output);
      const int code = zipk::exit_code(report);
      if (code != zipk::kExitOk) std::cerr << "zipk: " << report["error"]["message"].get<std::string>() << '\n';
      return code;
    }
  } catch (const zipk::ParseError& e) {
    std::cerr << "zipk: parse error: " << e.what() << '\n';
    return zipk::kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "zipk: internal error: " << e.what() << '\n';
    return 1;
  }
  return zipk::kExitParse;
}
