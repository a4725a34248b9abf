#include "golden.hpp"

#include <qes/golden_data.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qes::cli {

using nlohmann::json;
using qes::Parity;
using qes::Rational;
using qes::RationalPoly;

namespace {

RationalPoly poly_from_json(const json& arr) {
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_number_integer()) throw std::runtime_error("coefficients must be integers");
    coeffs.emplace_back(static_cast<long>(c.get<long long>()));
  }
  return RationalPoly{std::move(coeffs)};
}

Parity parity_from_json(const json& value) {
  const std::string s = value.get<std::string>();
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw std::runtime_error("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

}  // namespace

std::vector<GoldenRow> parse_golden_tables(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("golden tables: ") + e.what());
  }
  try {
    std::vector<GoldenRow> rows;
    for (const auto& entry : doc.at("tables")) {
      GoldenRow row;
      row.N = entry.at("N").get<int>();
      row.parity = parity_from_json(entry.at("parity"));
      row.reduced = poly_from_json(entry.at("coefficients"));
      row.stripped_power = entry.at("stripped_power").get<int>();
      if (row.N < 0 || row.stripped_power < 0)
        throw std::runtime_error("negative N or stripped_power");
      if (entry.contains("elimination")) {
        const auto& elim = entry.at("elimination");
        GoldenElimination e;
        e.s = poly_from_json(elim.at("poly"));
        e.ak_index = elim.at("ak_index").get<int>();
        e.ak_coeff = static_cast<long>(elim.at("ak_coeff").get<long long>());
        if (e.ak_index < 0 || e.ak_index > row.N)
          throw std::runtime_error("elimination index outside the family");
        row.elimination = std::move(e);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("golden tables: ") + e.what());
  }
}

std::vector<GoldenRow> load_golden_tables(const std::string& path) {
  if (path.empty()) return parse_golden_tables(qes::data::kGoldenTablesJson);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read golden tables: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_golden_tables(buf.str());
}

std::vector<std::string> compare_against_golden(const std::vector<GoldenRow>& rows) {
  std::vector<std::string> mismatches;
  for (const auto& row : rows) {
    const auto rc = qes::reduced_condition({row.N, row.parity});
    const char* parity_name = row.parity == Parity::even ? "even" : "odd";
    // the rows are sign-normalized, so equality up to a global sign
    if (rc.poly != row.reduced && rc.poly != -row.reduced) {
      mismatches.push_back("N=" + std::to_string(row.N) + " " + parity_name +
                           ": condition is " + rc.poly.to_string() + ", table has " +
                           row.reduced.to_string());
    }
    if (rc.stripped_power != row.stripped_power) {
      mismatches.push_back("N=" + std::to_string(row.N) + " " + parity_name +
                           ": stripped power is " + std::to_string(rc.stripped_power) +
                           ", table has " + std::to_string(row.stripped_power));
    }
  }
  return mismatches;
}

const GoldenRow* find_row(const std::vector<GoldenRow>& rows, int N, Parity parity) {
  for (const auto& row : rows)
    if (row.N == N && row.parity == parity) return &row;
  return nullptr;
}

}  // namespace qes::cli
