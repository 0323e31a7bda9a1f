#pragma once

namespace uncsimp {

// Exit codes: 0 success, 1 usage or parse failure, 2 input validation failure,
// 3 internal invariant breach (fast/oracle disagreement, unexpected state).
int run_cli(int argc, const char* const* argv);

}  // namespace uncsimp
