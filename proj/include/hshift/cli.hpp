// Command-line front end.  `run` is the whole program minus process I/O so
// tests can drive it and compare outputs byte for byte.
//
// Exit codes: 0 ok, 1 failed check or other error, 2 parse error,
// 3 resource cap hit, 4 precision error.

#pragma once

#include <string>
#include <vector>

namespace hshift::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// `args` excludes the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace hshift::cli
