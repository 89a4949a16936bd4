#pragma once

#include <string>
#include <vector>

namespace enumkit::cli {

/// Entry point shared by the binary and the tests. args excludes argv[0].
/// Returns the process exit code: 0 when all declared bound checks pass,
/// 1 when a check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args);

}  // namespace enumkit::cli
