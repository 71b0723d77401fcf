#include "hydrosp/lp/lp_format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace hydrosp::lp {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string identifier(const std::string& name, char prefix, int index) {
  std::string id(1, prefix);
  id += std::to_string(index);
  if (name.empty()) return id;
  id += '_';
  for (char c : name) id += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  return id;
}

void write_terms(std::ostream& out, const std::vector<std::pair<double, std::string>>& terms) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  int on_line = 0;
  for (const auto& [coef, name] : terms) {
    out << (coef < 0 ? " - " : " + ") << number(std::abs(coef)) << ' ' << name;
    if (++on_line % 8 == 0) out << "\n   ";
  }
}

}  // namespace

void write_lp_format(const LinearProgram& lp, std::ostream& out, std::span<const int> binaries) {
  std::vector<std::string> names(lp.num_columns());
  for (int j = 0; j < lp.num_columns(); ++j) names[j] = identifier(lp.column_name(j), 'x', j);

  out << "Minimize\n obj:";
  std::vector<std::pair<double, std::string>> terms;
  for (int j = 0; j < lp.num_columns(); ++j) {
    if (lp.cost(j) != 0.0) terms.emplace_back(lp.cost(j), names[j]);
  }
  write_terms(out, terms);
  if (lp.objective_offset() != 0.0) out << (lp.objective_offset() < 0 ? " - " : " + ") << number(std::abs(lp.objective_offset()));
  out << "\nSubject To\n";
  for (int i = 0; i < lp.num_rows(); ++i) {
    terms.clear();
    for (const Term& t : lp.row(i)) terms.emplace_back(t.value, names[t.column]);
    out << ' ' << identifier(lp.row_name(i), 'c', i) << ':';
    write_terms(out, terms);
    switch (lp.sense(i)) {
      case RowSense::kLessEqual: out << " <= "; break;
      case RowSense::kGreaterEqual: out << " >= "; break;
      case RowSense::kEqual: out << " = "; break;
    }
    out << number(lp.rhs(i)) << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_columns(); ++j) {
    const double l = lp.lower(j), u = lp.upper(j);
    if (std::isinf(l) && std::isinf(u)) {
      out << ' ' << names[j] << " free\n";
    } else if (l == u) {
      out << ' ' << names[j] << " = " << number(l) << '\n';
    } else {
      out << ' ' << (std::isinf(l) ? "-inf" : number(l)) << " <= " << names[j] << " <= "
          << (std::isinf(u) ? "+inf" : number(u)) << '\n';
    }
  }
  if (!binaries.empty()) {
    out << "Binaries\n";
    for (int j : binaries) out << ' ' << names[j] << '\n';
  }
  out << "End\n";
}

std::string to_lp_format(const LinearProgram& lp, std::span<const int> binaries) {
  std::ostringstream out;
  write_lp_format(lp, out, binaries);
  return out.str();
}

}  // namespace hydrosp::lp
