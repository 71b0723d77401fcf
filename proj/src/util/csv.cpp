#include "hydrosp/util/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "hydrosp/errors.hpp"

namespace hydrosp::util {

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view cell = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
    out.emplace_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::string text;
  if (!read_line(text)) throw ParseError("missing header row", line_ + 1);
  header_ = split_csv_line(text);
}

bool CsvReader::read_line(std::string& out) {
  while (std::getline(in_, out)) {
    ++line_;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    const auto first = out.find_first_not_of(" \t");
    if (first == std::string::npos || out[first] == '#') continue;
    return true;
  }
  return false;
}

int CsvReader::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int CsvReader::require_column(std::string_view name) const {
  const int c = column(name);
  if (c < 0) throw ParseError("missing column '" + std::string(name) + "'", 1);
  return c;
}

bool CsvReader::next() {
  std::string text;
  if (!read_line(text)) return false;
  row_ = split_csv_line(text);
  if (row_.size() != header_.size()) {
    throw ParseError("expected " + std::to_string(header_.size()) + " fields, found " + std::to_string(row_.size()),
                     line_);
  }
  return true;
}

const std::string& CsvReader::field(int index) const { return row_.at(static_cast<std::size_t>(index)); }

double CsvReader::number(int index) const {
  const auto v = optional_number(index);
  if (!v) throw ParseError("empty value in column '" + header_.at(index) + "'", line_);
  return *v;
}

std::optional<double> CsvReader::optional_number(int index) const {
  const std::string& s = field(index);
  if (s.empty() || s == "-") return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not a number in column '" + header_.at(index) + "': '" + s + "'", line_);
  }
  return v;
}

long long CsvReader::integer(int index) const {
  const std::string& s = field(index);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not an integer in column '" + header_.at(index) + "': '" + s + "'", line_);
  }
  return v;
}

}  // namespace hydrosp::util
