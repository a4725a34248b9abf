#pragma once

#include <fstream>
#include <iostream>
#include <string>

namespace qes::cli {

// Shortest decimal string that parses back to exactly the same double.
// Locale-independent by construction.
std::string format_double(double value);

// Rounded to the given number of significant digits.
std::string format_double(double value, int significant);

// Writes to the file at path, or to stdout when path is empty.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path);
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace qes::cli
