#include "commands.hpp"
#include "format.hpp"
#include "report.hpp"

#include <qes/rational.hpp>
#include <qes/spectrum.hpp>
#include <qes/wavefunction.hpp>

#include <cmath>
#include <memory>
#include <optional>
#include <vector>

namespace qes::cli {
namespace {

struct SolveOptions {
  int N = 0;
  qes::Parity parity = qes::Parity::even;
  int digits = 12;
  std::string format = "json";
  bool verify = false;
  std::string output;
};

const char* well_name(qes::WellType type) {
  return type == qes::WellType::single_well ? "single_well" : "double_well";
}

struct NumericCheck {
  qes::SpectrumMatch match;
  double L = 0;
  int n_used = 0;
};

int run_solve(const SolveOptions& opt) {
  const qes::QESProblem prob{opt.N, opt.parity};
  const auto sols = qes::solve(prob, opt.digits);

  std::vector<int> nodes(sols.size());
  std::vector<std::optional<NumericCheck>> checks(sols.size());
  for (size_t i = 0; i < sols.size(); ++i) {
    nodes[i] = qes::count_nodes(sols[i]);
    if (opt.verify) {
      const auto report = qes::validate_solution(sols[i]);
      if (report.matched) {
        checks[i] = NumericCheck{*report.matched,
                                 std::abs(sols[i].d_value.get_d()) + 10,
                                 report.n_used};
      }
    }
  }

  OutputStream out(opt.output);
  std::ostream& os = out.get();

  if (opt.format == "json") {
    auto report = make_report("solve");
    report["N"] = opt.N;
    report["parity"] = parity_name(opt.parity);
    report["digits"] = opt.digits;
    report["energy"] = prob.energy();
    report["solution_count"] = sols.size();
    auto list = nlohmann::ordered_json::array();
    for (size_t i = 0; i < sols.size(); ++i) {
      const auto& sol = sols[i];
      nlohmann::ordered_json s;
      s["d"] = sol.d_value.get_d();
      s["d_decimal"] = qes::decimal_string(sol.d_value, opt.digits);
      // endpoints rounded four places past the refinement width
      s["bracket"] = {qes::decimal_string(sol.d_bracket.lo, opt.digits + 4),
                      qes::decimal_string(sol.d_bracket.hi, opt.digits + 4)};
      s["well_type"] = well_name(sol.well_type);
      s["nodes"] = nodes[i];
      s["coefficients"] = sol.coefficients;
      if (checks[i]) {
        const auto& check = *checks[i];
        nlohmann::ordered_json nc;
        nc["L"] = check.L;
        nc["n"] = check.n_used;
        nc["nearest_eigenvalue"] = check.match.nearest_eigenvalue;
        nc["gap"] = check.match.gap;
        nc["eigenindex"] = check.match.eigenindex;
        nc["node_count"] = check.match.node_count;
        nc["index_matches_nodes"] = check.match.index_matches_nodes;
        s["numeric_check"] = nc;
      }
      list.push_back(std::move(s));
    }
    report["solutions"] = std::move(list);
    os << report.dump(2) << '\n';
    return 0;
  }

  // csv
  os << "N,parity,energy,d,bracket_lo,bracket_hi,well_type,nodes,coefficients";
  if (opt.verify) os << ",nearest_eigenvalue,gap,eigenindex,index_matches_nodes";
  os << '\n';
  for (size_t i = 0; i < sols.size(); ++i) {
    const auto& sol = sols[i];
    os << opt.N << ',' << parity_name(opt.parity) << ',' << prob.energy() << ','
       << format_double(sol.d_value.get_d()) << ','
       << qes::decimal_string(sol.d_bracket.lo, opt.digits + 4) << ','
       << qes::decimal_string(sol.d_bracket.hi, opt.digits + 4) << ','
       << well_name(sol.well_type) << ',' << nodes[i] << ',';
    for (size_t k = 0; k < sol.coefficients.size(); ++k) {
      if (k) os << ';';
      os << format_double(sol.coefficients[k]);
    }
    if (checks[i]) {
      const auto& check = *checks[i];
      os << ',' << format_double(check.match.nearest_eigenvalue) << ','
         << format_double(check.match.gap) << ',' << check.match.eigenindex << ','
         << (check.match.index_matches_nodes ? "true" : "false");
    } else if (opt.verify) {
      os << ",,,,";
    }
    os << '\n';
  }
  return 0;
}

}  // namespace

void register_solve(CLI::App& app, int& exit_code) {
  auto opt = std::make_shared<SolveOptions>();
  CLI::App* cmd =
      app.add_subcommand("solve", "find every admissible shift of one polynomial family");
  cmd->add_option("--N", opt->N, "polynomial degree; the state carries energy 2N + 1")
      ->required()
      ->check(CLI::Range(0, 24));
  add_parity_option(cmd, opt->parity);
  cmd->add_option("--digits", opt->digits, "decimal digits the shifts are refined to")
      ->default_val(12)
      ->check(CLI::Range(1, 60))
      ->envname("QES_DIGITS");
  cmd->add_option("--format", opt->format, "output format")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--verify", opt->verify,
                "cross-check each state against the discretized operator");
  cmd->add_option("--output", opt->output, "write to this file instead of stdout");
  cmd->callback([opt, &exit_code] { exit_code = run_solve(*opt); });
}

}  // namespace qes::cli
