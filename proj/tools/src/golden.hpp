#pragma once

#include <qes/families.hpp>
#include <qes/polynomial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qes::cli {

// One frozen coefficient relation s(v) + c * a_k = 0, valid at every
// admissible shift of its family. v = d for even rows, v = -d for odd ones.
struct GoldenElimination {
  qes::RationalPoly s;
  int ak_index = 0;
  long ak_coeff = 0;
};

struct GoldenRow {
  int N = 0;
  qes::Parity parity = qes::Parity::even;
  qes::RationalPoly reduced;  // even powers only, positive leading coefficient
  int stripped_power = 0;
  std::optional<GoldenElimination> elimination;
};

// Throws std::runtime_error on malformed text or a schema violation.
std::vector<GoldenRow> parse_golden_tables(const std::string& text);

// The copy embedded at build time when path is empty, else the file at path.
std::vector<GoldenRow> load_golden_tables(const std::string& path);

// Recomputes each row's family and compares. Returns one message per
// mismatch; empty means every row checks out.
std::vector<std::string> compare_against_golden(const std::vector<GoldenRow>& rows);

const GoldenRow* find_row(const std::vector<GoldenRow>& rows, int N, qes::Parity parity);

}  // namespace qes::cli
