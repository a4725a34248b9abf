#pragma once

#include <qes/families.hpp>

#include <CLI11.hpp>

#include <map>
#include <string>

namespace qes::cli {

// Each register_* wires one subcommand into the app. Callbacks run during
// parse and store their result in exit_code (0 ok, 1 check failure).
void register_solve(CLI::App& app, int& exit_code);
void register_tables(CLI::App& app, int& exit_code);
void register_wavefunction(CLI::App& app, int& exit_code);
void register_spectrum(CLI::App& app, int& exit_code);
void register_verify(CLI::App& app, int& exit_code);

inline CLI::Option* add_parity_option(CLI::App* cmd, qes::Parity& target) {
  static const std::map<std::string, qes::Parity> names{
      {"even", qes::Parity::even}, {"odd", qes::Parity::odd}};
  return cmd->add_option("--parity", target, "state parity under x -> -x")
      ->required()
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

inline const char* parity_name(qes::Parity parity) {
  return parity == qes::Parity::even ? "even" : "odd";
}

}  // namespace qes::cli
