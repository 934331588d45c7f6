#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace geofrechet {

// Command-line front end. Returns the process exit code: 0 on success,
// 2 on usage/validation errors, 3 when an internal guard trips.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geofrechet
