#pragma once

namespace gfnn {

/// Command-line front door. Exit codes: 0 success, 1 validation error,
/// 2 runtime failure.
int run_cli(int argc, const char* const* argv);

}  // namespace gfnn
