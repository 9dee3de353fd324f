#pragma once

#include <ostream>

namespace rpm::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitCompute = 2;

/// Entry point for the `rpm` command: subcommands run, figure and oracle.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rpm::harness
