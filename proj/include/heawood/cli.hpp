#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heawood {

/// Exit statuses: 0 success, 2 validation error or bad usage, 3 refusal
/// because a cap or budget was reached.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heawood
