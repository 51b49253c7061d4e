#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cslosc {

/// Runs the command-line surface. argv excludes the program name.
/// Returns 0 on success, 2 on input errors, 1 on internal errors,
/// 3 when --strict finds out-of-tolerance table cells.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace cslosc
