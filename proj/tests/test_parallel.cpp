#include "doctest.h"
#include "torsionlab/parallel.hpp"
#include "torsionlab/verify.hpp"

#include <cstdlib>
#include <vector>

using namespace torsionlab;

namespace {
std::vector<std::string> vanishing_sweep() {
    std::vector<long> params{5, 6, 7, -5, -6};
    std::vector<std::string> out(params.size());
    parallel_for(static_cast<long>(params.size()), [&](long i) {
        out[static_cast<size_t>(i)] =
            check_vanishing(Family::FigureEightPOverOne, params[static_cast<size_t>(i)]).to_json();
    });
    return out;
}
}  // namespace

TEST_CASE("TORSIONLAB_THREADS caps the thread count") {
    setenv("TORSIONLAB_THREADS", "1", 1);
    CHECK(sweep_threads() == 1);
    setenv("TORSIONLAB_THREADS", "3", 1);
#if defined(_OPENMP)
    CHECK(sweep_threads() == 3);
#else
    CHECK(sweep_threads() == 1);
#endif
    unsetenv("TORSIONLAB_THREADS");
}

TEST_CASE("serial and parallel sweeps produce identical output") {
    setenv("TORSIONLAB_THREADS", "1", 1);
    auto serial = vanishing_sweep();
    setenv("TORSIONLAB_THREADS", "4", 1);
    auto parallel = vanishing_sweep();
    unsetenv("TORSIONLAB_THREADS");
    CHECK(serial == parallel);
}
