#pragma once

namespace formlab {

// Entry point for the command-line tool; returns the process exit code
// (0 ok, 2 finished without converging, 64 bad flags or scenario).
int cli_dispatch(int argc, const char* const* argv);

}  // namespace formlab
