#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cfs::tool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolated = 2;

/// Entry point of the `cfsval` tool. `args` excludes the program name.
///
///   validate      --config FILE [--output-dir DIR] [--threads N]
///   estimate      --config FILE [--output-dir DIR] [--threads N]
///   dump-samples  --config FILE [--out FILE]
///   check-pose    --config FILE [--p x,y,z] [--c c1,c2,c3] [--pairs all|i-j,...]
///
/// Returns 0 on success (and a validated verdict), 2 if validation finds an unsafe sample
/// inside the sphere, 1 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfs::tool
