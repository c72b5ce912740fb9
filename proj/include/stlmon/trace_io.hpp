// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stlmon/trace.hpp"

namespace stlmon {

// JSON trace documents:
// {"duration": "8", "epsilon": "2", "tick": "1e-9",
//  "signals": [{"name": "x1", "initial": 0, "edges": [{"t": "2", "v": 1}]}]}
struct TraceOverrides {
    std::optional<Rational> tick;     // replaces the document's tick
    std::optional<Rational> epsilon;  // replaces the document's epsilon (time units)
};

DistributedSignal parse_trace(const std::string& text, const TraceOverrides& over = {});
DistributedSignal read_trace(std::istream& in, const TraceOverrides& over = {});
DistributedSignal load_trace(const std::string& path, const TraceOverrides& over = {});

std::string format_trace(const DistributedSignal& ds);
void save_trace(const DistributedSignal& ds, const std::string& path);

} // namespace stlmon
