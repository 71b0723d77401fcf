#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hydrosp::util {

// Shortest text that round-trips the double exactly.
std::string format_double(double v);

std::vector<std::string> split_csv_line(std::string_view line);

// Line-oriented reader for headed CSV files without quoting. Blank lines and
// lines starting with '#' are skipped.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  const std::vector<std::string>& header() const { return header_; }
  // Index of a header column, or -1.
  int column(std::string_view name) const;
  int require_column(std::string_view name) const;

  bool next();
  const std::vector<std::string>& row() const { return row_; }
  const std::string& field(int index) const;
  int line() const { return line_; }

  double number(int index) const;
  std::optional<double> optional_number(int index) const;
  long long integer(int index) const;

 private:
  bool read_line(std::string& out);

  std::istream& in_;
  std::vector<std::string> header_;
  std::vector<std::string> row_;
  int line_ = 0;
};

}  // namespace hydrosp::util
