#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symtheta::cli {

/// Exit codes: 0 ok, 1 verification failure or closed form/oracle
/// disagreement, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtheta::cli
