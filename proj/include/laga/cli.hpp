#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laga::cli {

/// Runs one command line (program name excluded). Exit codes: 0 success,
/// 1 compare found differing invariants, 2 usage, 3 computation error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace laga::cli
