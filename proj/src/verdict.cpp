// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/verdict.hpp"

#include <stdexcept>

namespace stlmon {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::true_: return "TRUE";
    case Verdict::false_: return "FALSE";
    case Verdict::unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict verdict_from_first(const FirstLetters& f) {
    if (f.zero && f.one) return Verdict::unknown;
    if (f.one) return Verdict::true_;
    if (f.zero) return Verdict::false_;
    throw std::logic_error("empty satisfaction set");
}

Verdict negate(Verdict v) {
    if (v == Verdict::true_) return Verdict::false_;
    if (v == Verdict::false_) return Verdict::true_;
    return v;
}

Verdict monitor(const MonitorContext& ctx, const FormulaPtr& phi) {
    if (ctx.config().backend == SetBackend::compact) {
        Evaluator<CompactBackend> ev(ctx);
        return verdict_from_first(CompactBackend::first(ev.eval(phi).front()));
    }
    Evaluator<ExplicitBackend> ev(ctx);
    return verdict_from_first(ExplicitBackend::first(ev.eval(phi).front()));
}

Verdict monitor(const DistributedSignal& ds, const FormulaPtr& phi, const EngineConfig& cfg) {
    return monitor(MonitorContext(ds, cfg), phi);
}

} // namespace stlmon
