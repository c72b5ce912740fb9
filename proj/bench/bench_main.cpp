// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0
//
// Wall-time comparison: approximate monitor, serial oracle and OpenMP oracle.
// Usage: stlmon_bench [instances=20] [seed=1]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stlmon/generator.hpp"
#include "stlmon/oracle.hpp"

using namespace stlmon;

namespace {

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

} // namespace

int main(int argc, char** argv) {
    const int instances = argc > 1 ? std::atoi(argv[1]) : 20;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    const std::vector<std::string> specs{"G (x1 -> F[0,2] (x2 | x3))", "G (x1 & x2 -> x3)", "F (x1 & x2 & x3)"};

    Rng rng(seed);
    std::vector<double> approx, serial, parallel;
    int mismatches = 0, infeasible = 0;
    for (int i = 0; i < instances; ++i) {
        GenParams gp;
        gp.n_signals = 3;
        gp.edges_per_signal = 4;
        gp.tick = Rational(1, 2);
        gp.quantum = 2;
        gp.duration = 40;
        gp.epsilon = 2;
        gp.seed = rng.next();
        const auto ds = generate(gp);
        const auto phi = parse_formula(specs[static_cast<std::size_t>(i) % specs.size()], ds.names(), ds.tick);
        try {
            Verdict a{}, s{}, p{};
            approx.push_back(timed([&] { a = monitor(ds, phi); }));
            serial.push_back(timed([&] { s = oracle_verdict_serial(ds, phi).verdict; }));
            parallel.push_back(timed([&] { p = oracle_verdict(ds, phi).verdict; }));
            if (s != p || (a != Verdict::unknown && a != s)) ++mismatches;
        } catch (const OracleInfeasible&) {
            ++infeasible;
        }
    }
    std::printf("threads %d, instances %zu (infeasible %d)\n", omp_get_max_threads(), approx.size(), infeasible);
    std::printf("median seconds: approximate %.6f, oracle serial %.6f, oracle parallel %.6f\n", median(approx),
                median(serial), median(parallel));
    std::printf("median speedup of approximate over serial oracle: %.1fx\n",
                median(serial) / std::max(median(approx), 1e-9));
    std::printf("verdict mismatches: %d\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
