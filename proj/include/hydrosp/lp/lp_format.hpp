#pragma once

#include <ostream>
#include <span>
#include <string>

#include "hydrosp/lp/linear_program.hpp"

namespace hydrosp::lp {

// Writes the problem in CPLEX LP text format for cross-checking with
// external solvers.
void write_lp_format(const LinearProgram& lp, std::ostream& out, std::span<const int> binaries = {});
std::string to_lp_format(const LinearProgram& lp, std::span<const int> binaries = {});

}  // namespace hydrosp::lp
