// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "stlmon/engine.hpp"

namespace stlmon {

enum class Verdict { true_, false_, unknown };

std::string to_string(Verdict v);
Verdict verdict_from_first(const FirstLetters& f);
Verdict negate(Verdict v);

Verdict monitor(const DistributedSignal& ds, const FormulaPtr& phi, const EngineConfig& cfg = {});
Verdict monitor(const MonitorContext& ctx, const FormulaPtr& phi);

} // namespace stlmon
