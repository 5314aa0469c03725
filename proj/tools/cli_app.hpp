#pragma once

namespace gamma_forms::cli {

// Exit codes: 0 success, 2 invalid flags/preconditions, 3 numeric failure,
// 4 headline (an equality verdict of "yes"), 5 identity check failure.
int run(int argc, const char* const* argv);

}  // namespace gamma_forms::cli
