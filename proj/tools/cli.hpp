#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsum::cli {

/// Exit codes of the dsum command.
enum Exit : int { Ok = 0, VerificationFailed = 1, Usage = 2 };

/// Runs one dsum invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsum::cli
