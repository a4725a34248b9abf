#include "commands.hpp"
#include "format.hpp"

#include <qes/rational.hpp>
#include <qes/version.hpp>
#include <qes/wavefunction.hpp>

#include <cmath>
#include <iostream>
#include <memory>
#include <string>

namespace qes::cli {
namespace {

struct WavefunctionOptions {
  int N = 0;
  qes::Parity parity = qes::Parity::even;
  int root_index = 0;
  int digits = 12;
  double x_max = 0;  // 0 means |d| + 8, wide enough for the Gaussian tail
  int points = 601;
  std::string output;
};

int run_wavefunction(const WavefunctionOptions& opt) {
  const qes::QESProblem prob{opt.N, opt.parity};
  const auto sols = qes::solve(prob, opt.digits);
  if (sols.empty()) {
    std::cerr << "qes: family N=" << opt.N << " " << parity_name(opt.parity)
              << " has no admissible shift\n";
    return 1;
  }
  if (opt.root_index < 0 || static_cast<size_t>(opt.root_index) >= sols.size()) {
    std::cerr << "qes: root index " << opt.root_index << " out of range, family has "
              << sols.size() << " shifts\n";
    return 1;
  }
  const auto& sol = sols[static_cast<size_t>(opt.root_index)];
  const double d = sol.d_value.get_d();
  const double x_max = opt.x_max > 0 ? opt.x_max : std::abs(d) + 8;
  const auto grid = qes::sample(sol, x_max, opt.points);

  OutputStream out(opt.output);
  std::ostream& os = out.get();
  os << "# qes " << qes::kVersion << " wavefunction samples\n";
  os << "# N=" << opt.N << " parity=" << parity_name(opt.parity)
     << " energy=" << sol.energy << " root_index=" << opt.root_index << '\n';
  os << "# d=" << qes::decimal_string(sol.d_value, opt.digits)
     << " norm=" << format_double(grid.norm) << " nodes=" << qes::count_nodes(sol)
     << '\n';
  os << "x,psi_normalized,potential\n";
  for (size_t i = 0; i < grid.xs.size(); ++i) {
    const double x = grid.xs[i];
    const double wall = std::abs(x) - d;
    os << format_double(x) << ',' << format_double(grid.psi_normalized[i]) << ','
       << format_double(wall * wall) << '\n';
  }
  return 0;
}

std::string odd_count_check(std::string& value) {
  try {
    const long v = std::stol(value);
    if (v < 3 || v % 2 == 0) return "sample count must be odd and at least 3";
  } catch (const std::exception&) {
    return "sample count must be an integer";
  }
  return {};
}

}  // namespace

void register_wavefunction(CLI::App& app, int& exit_code) {
  auto opt = std::make_shared<WavefunctionOptions>();
  CLI::App* cmd = app.add_subcommand(
      "wavefunction", "sample one normalized bound state on a symmetric grid (csv)");
  cmd->add_option("--N", opt->N, "polynomial degree of the family")
      ->required()
      ->check(CLI::Range(0, 24));
  add_parity_option(cmd, opt->parity);
  cmd->add_option("--root-index", opt->root_index,
                  "which shift to sample, counting from the most negative")
      ->default_val(0)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--digits", opt->digits, "decimal digits the shift is refined to")
      ->default_val(12)
      ->check(CLI::Range(1, 60))
      ->envname("QES_DIGITS");
  cmd->add_option("--x-max", opt->x_max, "half-width of the sampled window (default |d| + 8)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--points", opt->points, "sample count, odd so x = 0 lands on a point")
      ->default_val(601)
      ->check(CLI::Validator(odd_count_check, "ODD"));
  cmd->add_option("--output", opt->output, "write to this file instead of stdout");
  cmd->callback([opt, &exit_code] { exit_code = run_wavefunction(*opt); });
}

}  // namespace qes::cli
