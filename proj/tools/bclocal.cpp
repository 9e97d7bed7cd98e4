#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bclocal/serialize.hpp"

using namespace bclocal;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--field", cfg.field, "local field descriptor, e.g. Q2 or Q3[x^2-3]");
  cmd->add_option("--levels", cfg.levels, "level list n:m[,n:m...]");
  cmd->add_option("--beta", cfg.beta, "comma-separated betas, inf allowed");
  cmd->add_option("--N", cfg.N, "matrix truncation size");
  cmd->add_option("--B", cfg.B, "coefficient cutoff for global sums");
  cmd->add_option("--global", cfg.global_field, "global field: Q, Q(i), Q(sqrt:d)");
  cmd->add_option("--p", cfg.p, "rational prime for the induced mass");
  cmd->add_option("--format", cfg.format, "json, csv, or markdown");
  cmd->add_option("--out", cfg.out, "output file, stdout when omitted");
  cmd->add_option("--max-n", cfg.guards.max_n, "guardrail: largest n");
  cmd->add_option("--max-m", cfg.guards.max_m, "guardrail: deepest m");
  cmd->add_option("--max-q", cfg.guards.max_q, "guardrail: largest residue size");
  cmd->add_option("--max-ops", cfg.guards.max_ops, "guardrail: sweep budget");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-level verification runs over local arithmetic data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML key=value config, sections per command");

  RunConfig cfg;
  std::string which;
  for (const char* name : {"levels", "kms", "ktheory", "prim", "induce", "all"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " report");
    add_common(sub, cfg);
    sub->callback([&which, name] { which = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  }

  try {
    nlohmann::json rep;
    if (which == "levels") rep = levels_report(cfg);
    else if (which == "kms") rep = kms_report(cfg);
    else if (which == "ktheory") rep = ktheory_report(cfg);
    else if (which == "prim") rep = prim_space_report(cfg);
    else if (which == "induce") rep = induce_report(cfg);
    else rep = all_report(cfg);
    std::string text = render_report(rep, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) {
        std::cerr << "cannot open " << cfg.out << "\n";
        return 2;
      }
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    // descriptor-validation failures are usage errors, the rest are run failures
    bool usage = e.code() == Errc::BadDescriptor || e.code() == Errc::NotPrime ||
                 e.code() == Errc::PolynomialNotIrreducibleModP || e.code() == Errc::NotEisenstein;
    return usage ? 64 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
