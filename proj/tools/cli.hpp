// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace stlmon {

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_true = 0,
    exit_false = 1,
    exit_unknown = 2,
    exit_error = 3,
    exit_infeasible = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stlmon
