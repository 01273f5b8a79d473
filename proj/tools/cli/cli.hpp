#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "syzcert/criteria.hpp"

namespace syz::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitUnsettled = 3,  ///< certify/sweep: a failed obligation or an Unknown verdict
  kExitLimit = 4,      ///< enumeration cap, scan limit, or I/O failure
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or --out FILE); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// certify_case for every d in [d_min, d_max], in order of d. `jobs` = 0
/// means one worker per hardware thread.
std::vector<criteria::Certificate> sweep(std::uint64_t n, std::uint64_t p, std::uint64_t d_min,
                                         std::uint64_t d_max, unsigned jobs = 0);

}  // namespace syz::cli
