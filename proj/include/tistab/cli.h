#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tistab {

/// Exit codes: 0 success or pass, 1 check failed, 2 usage or IO error.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
/// Convenience for tests; args exclude the program name.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tistab
