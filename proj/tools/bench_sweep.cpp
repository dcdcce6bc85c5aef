#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "torsionlab/parallel.hpp"
#include "torsionlab/verify.hpp"

// Times the vanishing sweep that dominates batch verification. The iteration
// space is fixed, so serial and parallel runs do identical work; set
// TORSIONLAB_THREADS to compare scaling.

int main(int argc, char** argv) {
    using namespace torsionlab;
    using clock = std::chrono::steady_clock;

    int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::vector<std::pair<Family, long>> jobs;
    for (long p = 5; p <= 12; ++p) {
        jobs.emplace_back(Family::FigureEightPOverOne, p);
        jobs.emplace_back(Family::FigureEightPOverOne, -p);
    }
    for (long q = 2; q <= 6; ++q) {
        jobs.emplace_back(Family::FigureEightOneOverQ, q);
        jobs.emplace_back(Family::FigureEightOneOverQ, -q);
    }
    for (long q = 2; q <= 4; ++q) {
        jobs.emplace_back(Family::FiveTwoOneOverQ, q);
        jobs.emplace_back(Family::FiveTwoOneOverQ, -q);
    }

    std::printf("threads=%d jobs=%zu repeats=%d\n", sweep_threads(), jobs.size(), repeats);
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        std::vector<VerificationReport> reports(jobs.size());
        auto t0 = clock::now();
        parallel_for(static_cast<long>(jobs.size()), [&](long i) {
            auto [f, par] = jobs[static_cast<size_t>(i)];
            reports[static_cast<size_t>(i)] = check_vanishing(f, par);
        });
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        int passed = 0;
        for (const auto& rep : reports)
            if (rep.pass) ++passed;
        std::printf("run %d: %.3fs, %d/%zu pass\n", r, dt, passed, jobs.size());
        if (dt < best) best = dt;
    }
    std::printf("best %.3fs\n", best);
    return 0;
}
