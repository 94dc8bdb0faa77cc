#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace eexact {

// In-process entry point shared by the binary and the test suite. `args` is
// argv without the program name. Returns the exit code:
//   0 predicate true / task succeeded
//   1 predicate false / violations found
//   2 invalid input (parse errors, ill-defined maps, mismatches)
//   3 search or generation exhausted
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eexact
