#pragma once

#include <qes/version.hpp>

#include <json.hpp>

namespace qes::cli {

inline nlohmann::ordered_json make_report(const char* command) {
  nlohmann::ordered_json report;
  report["tool"] = "qes";
  report["version"] = qes::kVersion;
  report["command"] = command;
  return report;
}

}  // namespace qes::cli
