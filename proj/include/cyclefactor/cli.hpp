#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclefactor {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInconsistent = 3;

// Runs one command line (args[0] is the program name). Output goes to `out`,
// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CYCLEFACTOR_THREADS when set to a positive integer, else the hardware count.
int default_thread_count();

}  // namespace cyclefactor
