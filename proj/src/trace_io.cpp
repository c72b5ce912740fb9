// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stlmon {
namespace {

using nlohmann::json;

Rational number(const json& v, const char* what) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_boolean()) return Rational(v.get<bool>() ? 1 : 0);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
        return Rational::parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
    }
    throw std::invalid_argument(std::string("trace: field '") + what + "' must be a number or decimal string");
}

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw std::invalid_argument(std::string("trace: missing field '") + key + "'");
    return *it;
}

std::string letter_json(const Letter& l) {
    return l.is_integer() ? std::to_string(l.num()) : "\"" + l.to_string() + "\"";
}

} // namespace

DistributedSignal parse_trace(const std::string& text, const TraceOverrides& over) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("trace: ") + e.what());
    }
    DistributedSignal ds;
    if (over.tick) ds.tick = *over.tick;
    else if (doc.contains("tick")) ds.tick = number(doc["tick"], "tick");
    if (ds.tick <= Rational(0)) throw std::invalid_argument("trace: tick must be positive");
    ds.duration = to_ticks(number(field(doc, "duration"), "duration"), ds.tick);
    ds.epsilon = to_ticks(over.epsilon ? *over.epsilon : number(field(doc, "epsilon"), "epsilon"), ds.tick);
    for (const auto& js : field(doc, "signals")) {
        Signal x;
        x.name = field(js, "name").get<std::string>();
        x.initial = number(field(js, "initial"), "initial");
        if (js.contains("edges"))
            for (const auto& je : js["edges"])
                x.edges.push_back({to_ticks(number(field(je, "t"), "t"), ds.tick), number(field(je, "v"), "v")});
        ds.signals.push_back(std::move(x));
    }
    if (doc.contains("reference") && !doc["reference"].is_null())
        ds.reference = ds.index_of(doc["reference"].get<std::string>());
    require_valid(ds);
    return ds;
}

DistributedSignal read_trace(std::istream& in, const TraceOverrides& over) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_trace(buf.str(), over);
}

DistributedSignal load_trace(const std::string& path, const TraceOverrides& over) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");
    return read_trace(in, over);
}

std::string format_trace(const DistributedSignal& ds) {
    // Hand-written so the layout stays stable and diff-friendly.
    auto time = [&](Tick t) { return "\"" + to_time(t, ds.tick).to_decimal() + "\""; };
    std::ostringstream out;
    out << "{\n  \"duration\": " << time(ds.duration) << ",\n  \"epsilon\": " << time(ds.epsilon)
        << ",\n  \"tick\": \"" << ds.tick.to_decimal() << "\",\n";
    if (ds.reference) out << "  \"reference\": \"" << ds.signals[*ds.reference].name << "\",\n";
    out << "  \"signals\": [";
    for (std::size_t i = 0; i < ds.signals.size(); ++i) {
        const auto& x = ds.signals[i];
        out << (i ? ",\n" : "\n") << "    {\"name\": " << json(x.name).dump() << ", \"initial\": " << letter_json(x.initial)
            << ", \"edges\": [";
        for (std::size_t k = 0; k < x.edges.size(); ++k)
            out << (k ? ", " : "") << "{\"t\": " << time(x.edges[k].time) << ", \"v\": " << letter_json(x.edges[k].value) << "}";
        out << "]}";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

void save_trace(const DistributedSignal& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << format_trace(ds);
}

} // namespace stlmon
