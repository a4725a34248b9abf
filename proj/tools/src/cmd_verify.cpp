#include "commands.hpp"
#include "format.hpp"
#include "golden.hpp"

#include <qes/rational.hpp>
#include <qes/spectrum.hpp>
#include <qes/version.hpp>
#include <qes/wavefunction.hpp>

#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace qes::cli {
namespace {

using qes::Parity;
using qes::QESProblem;
using qes::Rational;
using qes::RationalPoly;

struct VerifyOptions {
  int n_max = 8;
  int digits = 12;
  std::string golden_path;
};

struct CheckLog {
  bool all_ok = true;
  int count = 0;
  void report(bool ok, const std::string& line) {
    std::cout << (ok ? "[ok] " : "[fail] ") << line << '\n';
    all_ok = all_ok && ok;
    ++count;
  }
};

bool proportional(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return Rational(b.leading()) * a == Rational(a.leading()) * b;
}

int run_verify(const VerifyOptions& opt) {
  std::cout << "qes " << qes::kVersion << " self-check, families N <= " << opt.n_max
            << "\n\n";
  CheckLog log;

  {
    bool ok = true;
    for (int N = 0; N <= opt.n_max; ++N) {
      const QESProblem even{N, Parity::even};
      const auto et = qes::coefficients_by_recurrence(even);
      for (int k = 1; k <= N; ++k)
        ok = ok && qes::coefficients_by_determinant(even, k) == et.a[static_cast<size_t>(k)];
      ok = ok && qes::coefficients_by_determinant(even, N + 1) == qes::extended_coefficient(even);

      const QESProblem odd{N, Parity::odd};
      const auto ot = qes::coefficients_by_recurrence(odd);
      for (int k = 1; k + 1 <= N; ++k)
        ok = ok && qes::coefficients_by_determinant(odd, k) == ot.a[static_cast<size_t>(k) + 1];
      if (N >= 1)
        ok = ok && qes::coefficients_by_determinant(odd, N) == qes::extended_coefficient(odd);
    }
    log.report(ok, "recurrence and continuant coefficient routes agree");
  }

  {
    bool ext_ok = true;
    bool row_ok = true;
    const RationalPoly d = RationalPoly::variable();
    for (int N = 0; N <= opt.n_max; ++N) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        const QESProblem prob{N, parity};
        const RationalPoly cond = qes::condition_polynomial(prob);
        ext_ok = ext_ok && proportional(cond, qes::extended_coefficient(prob));
        if (N >= 1) {
          const auto table = qes::coefficients_by_recurrence(prob);
          const RationalPoly row =
              qes::make_rational(2) * table.a[static_cast<size_t>(N) - 1] +
              qes::make_rational(2L * N) * (d * table.a[static_cast<size_t>(N)]);
          row_ok = row_ok && proportional(row, cond);
        }
      }
    }
    log.report(ext_ok, "closure condition is proportional to the extended coefficient");
    log.report(row_ok, "closure condition is proportional to the last open row");
  }

  {
    bool ok = true;
    for (int N = 0; N <= opt.n_max; ++N) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        const auto table = qes::coefficients_by_recurrence({N, parity});
        const int offset = parity == Parity::even ? 0 : 1;
        for (int n = 0; n <= N; ++n) {
          const RationalPoly& a = table.a[static_cast<size_t>(n)];
          const RationalPoly mirrored = a.negate_variable();
          ok = ok && ((n + offset) % 2 == 0 ? mirrored == a : mirrored == -a);
        }
      }
    }
    log.report(ok, "coefficient tables obey the d -> -d mirror");
  }

  std::vector<GoldenRow> golden;
  {
    bool ok = true;
    std::string detail;
    try {
      golden = load_golden_tables(opt.golden_path);
      std::vector<GoldenRow> in_range;
      for (const auto& row : golden)
        if (row.N <= opt.n_max) in_range.push_back(row);
      const auto mismatches = compare_against_golden(in_range);
      ok = mismatches.empty();
      for (const auto& m : mismatches) std::cerr << "qes: golden mismatch: " << m << '\n';
      detail = "reduced conditions match the golden rows (" +
               std::to_string(in_range.size()) + " rows)";
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("golden tables unusable: ") + e.what();
    }
    log.report(ok, detail);
  }

  // one pass over every admissible shift: closure bound, open-row residual,
  // and the grid-operator cross-check
  {
    bool bound_ok = true;
    bool residual_ok = true;
    bool spectral_ok = true;
    int states = 0;
    double worst_bound = 0;
    double worst_residual = 0;
    double worst_gap = 0;
    for (int N = 1; N <= opt.n_max; ++N) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        const QESProblem prob{N, parity};
        const auto rc = qes::reduced_condition(prob);
        Rational coeff_sum(0);
        for (const auto& c : rc.poly.coeffs()) coeff_sum += abs(c);
        const auto residual_rows = qes::ode_residual(prob);
        const RationalPoly& open_row = residual_rows[static_cast<size_t>(N) - 1];

        for (const auto& sol : qes::solve(prob, opt.digits)) {
          ++states;
          const Rational bound = qes::pow10(1 - opt.digits) * coeff_sum;
          const double ratio =
              std::abs(Rational(rc.poly(sol.d_value) / bound).get_d());
          worst_bound = std::max(worst_bound, ratio);
          bound_ok = bound_ok && ratio < 1.0;

          double scale = 0;
          double power = 1;
          const double ad = std::abs(sol.d_value.get_d());
          for (int k = 0; k <= *open_row.degree(); ++k) {
            scale += std::abs(open_row.coeff(k).get_d()) * std::max(1.0, power);
            power *= ad;
          }
          const double res = std::abs(Rational(open_row(sol.d_value)).get_d()) / scale;
          worst_residual = std::max(worst_residual, res);
          residual_ok = residual_ok && res < 1e-9;

          const auto report = qes::validate_solution(sol);
          const bool matched = report.matched && report.matched->gap < 5e-3 &&
                               report.matched->index_matches_nodes;
          if (report.matched) worst_gap = std::max(worst_gap, report.matched->gap);
          spectral_ok = spectral_ok && matched;
        }
      }
    }
    log.report(bound_ok, "refined shifts stay inside the closure bound (" +
                             std::to_string(states) + " shifts, worst ratio " +
                             format_double(worst_bound, 3) + ")");
    log.report(residual_ok, "open-row residual is numerically dead at every shift (worst " +
                                format_double(worst_residual, 3) + " of scale)");
    log.report(spectral_ok, "grid operator confirms every state (worst gap " +
                                format_double(worst_gap, 3) +
                                ", eigenvalue indices match node counts)");
  }

  {
    bool ok = true;
    int relations = 0;
    for (const auto& row : golden) {
      if (!row.elimination || row.N > opt.n_max) continue;
      ++relations;
      const auto table = qes::coefficients_by_recurrence({row.N, row.parity});
      for (const auto& sol : qes::solve({row.N, row.parity}, opt.digits)) {
        const Rational v =
            row.parity == Parity::even ? sol.d_value : Rational(-sol.d_value);
        const Rational value =
            row.elimination->s(v) +
            Rational(row.elimination->ak_coeff) *
                table.a[static_cast<size_t>(row.elimination->ak_index)](sol.d_value);
        ok = ok && std::abs(value.get_d()) < 1e-9;
      }
    }
    log.report(ok, "elimination relations hold at every shift (" +
                       std::to_string(relations) + " relations)");
  }

  if (opt.n_max >= 3) {
    bool ok = true;
    const auto table = qes::coefficients_by_recurrence({3, Parity::even});
    for (const auto& sol : qes::solve({3, Parity::even}, opt.digits)) {
      const double d = sol.d_value.get_d();
      const double resolved = -2.0 * d / (6.0 * d * d - 3.0);
      ok = ok && std::abs(table.a[3](sol.d_value).get_d() - resolved) < 1e-10;
    }
    log.report(ok, "a_3 at N=3 (even) follows the closed form -2d/(6d^2-3)");
  }

  std::cout << '\n'
            << (log.all_ok ? "self-check passed (" : "self-check FAILED (") << log.count
            << " checks)\n";
  return log.all_ok ? 0 : 1;
}

}  // namespace

void register_verify(CLI::App& app, int& exit_code) {
  auto opt = std::make_shared<VerifyOptions>();
  CLI::App* cmd = app.add_subcommand(
      "verify", "run the cross-route, golden-table, and grid-operator self checks");
  cmd->add_option("--N-max", opt->n_max, "largest family degree to check")
      ->default_val(8)
      ->check(CLI::Range(1, 12));
  cmd->add_option("--digits", opt->digits, "decimal digits for shift refinement")
      ->default_val(12)
      ->check(CLI::Range(1, 60))
      ->envname("QES_DIGITS");
  cmd->add_option("--golden", opt->golden_path,
                  "check against this JSON file instead of the embedded copy");
  cmd->callback([opt, &exit_code] { exit_code = run_verify(*opt); });
}

}  // namespace qes::cli
