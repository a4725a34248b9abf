#include "commands.hpp"
#include "format.hpp"
#include "report.hpp"

#include <qes/spectrum.hpp>

#include <cmath>
#include <memory>

namespace qes::cli {
namespace {

struct SpectrumOptions {
  double d = 0;
  double L = 0;  // 0 means |d| + 10
  int n = 4000;
  int k = 8;
  std::string format = "json";
  std::string output;
};

int run_spectrum(const SpectrumOptions& opt) {
  const double L = opt.L > 0 ? opt.L : std::abs(opt.d) + 10;
  const qes::SpectrumRequest request{opt.d, L, opt.n, opt.k};
  const auto report = qes::lowest_eigenvalues(request);

  OutputStream out(opt.output);
  std::ostream& os = out.get();

  if (opt.format == "json") {
    auto doc = make_report("spectrum");
    doc["d"] = opt.d;
    doc["L"] = L;
    doc["n_requested"] = opt.n;
    doc["n_used"] = report.n_used;
    doc["h"] = report.h;
    doc["eigenvalues"] = report.eigenvalues;
    os << doc.dump(2) << '\n';
  } else {
    os << "index,eigenvalue\n";
    for (size_t i = 0; i < report.eigenvalues.size(); ++i)
      os << i << ',' << format_double(report.eigenvalues[i], 10) << '\n';
  }
  return 0;
}

}  // namespace

void register_spectrum(CLI::App& app, int& exit_code) {
  auto opt = std::make_shared<SpectrumOptions>();
  CLI::App* cmd = app.add_subcommand(
      "spectrum", "lowest eigenvalues of the discretized operator on a Dirichlet box");
  cmd->add_option("--d", opt->d, "well shift in the potential (|x| - d)^2")->required();
  cmd->add_option("--L", opt->L, "half-width of the box (default |d| + 10)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--n", opt->n, "interior grid points, rounded up to odd")
      ->default_val(4000)
      ->check(CLI::Range(16, 2000000));
  cmd->add_option("--k", opt->k, "how many eigenvalues from the bottom")
      ->default_val(8)
      ->check(CLI::Range(1, 512));
  cmd->add_option("--format", opt->format, "output format")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", opt->output, "write to this file instead of stdout");
  cmd->callback([opt, &exit_code] { exit_code = run_spectrum(*opt); });
}

}  // namespace qes::cli
