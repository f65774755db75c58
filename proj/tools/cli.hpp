#pragma once

namespace cox::cli {

/// Entry point for the coxcli tool. Returns the process exit code:
/// 0 success, 1 usage/parse error, 2 infinite or oversized system,
/// 3 verification failure or verdict disagreement.
int run(int argc, const char* const* argv);

}  // namespace cox::cli
