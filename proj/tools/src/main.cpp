#include "commands.hpp"

#include <qes/version.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"exact bound states of the potential (|x| - d)^2"};
  app.set_version_flag("--version", qes::kVersion);
  app.require_subcommand(1);

  int exit_code = 0;
  qes::cli::register_solve(app, exit_code);
  qes::cli::register_tables(app, exit_code);
  qes::cli::register_wavefunction(app, exit_code);
  qes::cli::register_spectrum(app, exit_code);
  qes::cli::register_verify(app, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version land here with code 0; real usage errors get 2
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "qes: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
