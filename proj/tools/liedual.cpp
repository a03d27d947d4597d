#include <iostream>

#include <CLI11.hpp>

#include "liedual/commands.hpp"

int main(int argc, char** argv) {
  using namespace liedual;
  CommandOptions opts;
  try {
    opts.max_dim = max_dim_from_env();
  } catch (const Error& e) {
    std::cerr << format_error(e, false);
    return 2;
  }

  CLI::App app{"Metric, carrollian and galilean Lie algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Emit reports and errors as JSON");

  std::vector<std::string> args;
  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", args, "Algebra document (JSON)")->required()->expected(1);
    return sub;
  };
  file_cmd("check", "Validate a document and its attachments");
  file_cmd("invariant-forms", "Invariant symmetric forms and a nondegenerate member");
  CLI::App* der = file_cmd("derivations", "Basis of the derivation algebra");
  der->add_flag("--skew", opts.skew, "Only derivations skew for a form");
  der->add_option("--form", opts.form_file, "Form matrix or document with a form");
  CLI::App* dext = app.add_subcommand("double-extend", "Double extension of a metric Lie algebra");
  dext->add_option("BASE", args, "Base document with a form")->required()->expected(1);
  dext->add_option("--derivation", opts.derivation_file, "Skew derivation matrix or document")->required();
  file_cmd("reduce", "Reduce a bargmannian algebra to double extension data");
  file_cmd("carroll-dual", "Galilean dual of a carrollian algebra");
  file_cmd("galilei-dual", "Carrollian dual of a galilean algebra");
  CLI::App* cls = file_cmd("classify", "Canonical data of a double extension");
  cls->add_flag("--numeric", opts.numeric, "Also report numeric skew-eigenvalues");
  cls->add_option("--tol", opts.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  CLI::App* cat = app.add_subcommand("catalog", "Export a named algebra; no NAME lists the catalog");
  cat->add_option("NAME_ARGS", args, "Name followed by its arguments");
  cat->allow_extras(false);
  file_cmd("leibniz-decompose", "Carrollian and galilean sides of a leibnizian algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << format_error(Error(ErrorCode::Usage, e.what()), opts.json);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  CommandResult r = run_command(name, args, opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
