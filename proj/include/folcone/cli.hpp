#pragma once

// Command dispatch for the folcone tool. Takes the argument list without the
// program name and returns the process exit code: 0 success, 1 validation
// error, 2 mathematical failure, 3 I/O or syntax error.

#include <string>
#include <vector>

namespace folcone {

int cli_dispatch(const std::vector<std::string>& args);

} // namespace folcone
