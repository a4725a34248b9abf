#include "commands.hpp"
#include "format.hpp"
#include "golden.hpp"
#include "report.hpp"

#include <qes/rational.hpp>

#include <iostream>
#include <memory>
#include <vector>

namespace qes::cli {
namespace {

struct TablesOptions {
  int n_max = 5;
  int digits = 12;
  std::string format = "text";
  std::string golden_path;
  std::string output;
};

std::string render_condition(const qes::ReducedCondition& rc) {
  std::string body = rc.poly.to_string();
  if (rc.stripped_power == 0) return body;
  std::string head =
      rc.stripped_power == 1 ? "d" : "d^" + std::to_string(rc.stripped_power);
  return head + " * (" + body + ")";
}

// Condition coefficients are primitive integers; large families can spill
// past int64, in which case the JSON carries them as decimal strings.
nlohmann::ordered_json coefficient_to_json(const qes::Rational& c) {
  const qes::Integer num = c.get_num();
  if (num.fits_slong_p()) return static_cast<long>(num.get_si());
  return num.get_str();
}

int run_tables(const TablesOptions& opt) {
  const auto golden = load_golden_tables(opt.golden_path);

  std::vector<GoldenRow> in_range;
  for (const auto& row : golden)
    if (row.N <= opt.n_max) in_range.push_back(row);
  const auto mismatches = compare_against_golden(in_range);

  OutputStream out(opt.output);
  std::ostream& os = out.get();

  if (opt.format == "json") {
    auto report = make_report("tables");
    report["N_max"] = opt.n_max;
    report["digits"] = opt.digits;
    auto families = nlohmann::ordered_json::array();
    for (int N = 2; N <= opt.n_max; ++N) {
      for (qes::Parity parity : {qes::Parity::even, qes::Parity::odd}) {
        const qes::QESProblem prob{N, parity};
        const auto rc = qes::reduced_condition(prob);
        nlohmann::ordered_json f;
        f["N"] = N;
        f["parity"] = parity_name(parity);
        f["energy"] = prob.energy();
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : rc.poly.coeffs()) coeffs.push_back(coefficient_to_json(c));
        f["condition"] = {{"coefficients", coeffs},
                          {"stripped_power", rc.stripped_power},
                          {"rendered", render_condition(rc)}};
        auto shifts = nlohmann::ordered_json::array();
        for (const auto& sol : qes::solve(prob, opt.digits))
          shifts.push_back(qes::decimal_string(sol.d_value, opt.digits));
        f["shifts"] = std::move(shifts);
        if (const GoldenRow* row = find_row(golden, N, parity)) {
          f["golden_match"] = (rc.poly == row->reduced || rc.poly == -row->reduced) &&
                              rc.stripped_power == row->stripped_power;
        } else {
          f["golden_match"] = nullptr;
        }
        families.push_back(std::move(f));
      }
    }
    report["families"] = std::move(families);
    report["golden_rows_checked"] = in_range.size();
    report["golden_mismatches"] = mismatches;
    os << report.dump(2) << '\n';
  } else {
    os << "qes " << qes::kVersion << " family tables, N <= " << opt.n_max << "\n\n";
    for (int N = 2; N <= opt.n_max; ++N) {
      for (qes::Parity parity : {qes::Parity::even, qes::Parity::odd}) {
        const qes::QESProblem prob{N, parity};
        const auto rc = qes::reduced_condition(prob);
        os << "N=" << N << ' ' << parity_name(parity) << "  E=" << prob.energy() << '\n';
        os << "  condition: " << render_condition(rc) << '\n';
        os << "  shifts:";
        const auto sols = qes::solve(prob, opt.digits);
        if (sols.empty()) os << " (none)";
        for (size_t i = 0; i < sols.size(); ++i)
          os << (i ? ", " : " ") << qes::decimal_string(sols[i].d_value, opt.digits);
        os << '\n';
      }
    }
    os << "\ngolden rows checked: " << in_range.size()
       << ", mismatches: " << mismatches.size() << '\n';
  }

  for (const auto& m : mismatches) std::cerr << "qes: golden mismatch: " << m << '\n';
  return mismatches.empty() ? 0 : 1;
}

}  // namespace

void register_tables(CLI::App& app, int& exit_code) {
  auto opt = std::make_shared<TablesOptions>();
  CLI::App* cmd = app.add_subcommand(
      "tables", "print the family conditions and shifts, checked against the golden rows");
  cmd->add_option("--N-max", opt->n_max, "largest family degree to print")
      ->default_val(5)
      ->check(CLI::Range(2, 12));
  cmd->add_option("--digits", opt->digits, "decimal digits for the printed shifts")
      ->default_val(12)
      ->check(CLI::Range(1, 60))
      ->envname("QES_DIGITS");
  cmd->add_option("--format", opt->format, "output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--golden", opt->golden_path,
                  "compare against this JSON file instead of the embedded copy");
  cmd->add_option("--output", opt->output, "write to this file instead of stdout");
  cmd->callback([opt, &exit_code] { exit_code = run_tables(*opt); });
}

}  // namespace qes::cli
