#include "doctest.h"
#include "torsionlab/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

using namespace torsionlab;

namespace {
const ExactPolynomial x = ExactPolynomial::x();
const ExactPolynomial one = ExactPolynomial::one();

std::complex<double> cd(const ddc& v) { return v.to_complex(); }
std::complex<double> cd(const Root& r) { return r.value.to_complex(); }
}  // namespace

TEST_CASE("roots of x^2 + 1 are exactly +-i") {
    RootSet rs = find_roots(x.pow(2) + one);
    REQUIRE(rs.roots.size() == 2);
    for (const Root& r : rs.roots) {
        CHECK(std::abs(std::abs(cd(r).imag()) - 1.0) < 1e-14);
        CHECK(std::abs(cd(r).real()) < 1e-14);
        CHECK(r.multiplicity == 1);
    }
}

TEST_CASE("multiplicities come from the exact square-free decomposition") {
    ExactPolynomial p = (x + one).pow(3) * (x.pow(2) - x * Rat(3) + one);
    RootSet rs = find_roots(p);
    int triple = 0, simple = 0;
    for (const Root& r : rs.roots) {
        if (r.multiplicity == 3) {
            ++triple;
            CHECK(std::abs(cd(r) + 1.0) < 1e-12);
        } else {
            CHECK(r.multiplicity == 1);
            ++simple;
        }
    }
    CHECK(triple == 1);
    CHECK(simple == 2);
}

TEST_CASE("golden-ratio quartic to double-double accuracy") {
    // x^4 - 3x^2 + 1 has roots +-phi, +-1/phi
    ExactPolynomial p = x.pow(4) - x.pow(2) * Rat(3) + one;
    RootSet rs = find_roots(p, Precision::DoubleDouble);
    REQUIRE(rs.roots.size() == 4);
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (const Root& r : rs.roots) {
        double m = std::abs(cd(r).real());
        CHECK(std::min(std::abs(m - phi), std::abs(m - 1.0 / phi)) < 1e-14);
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("root ordering is (|a|, arg a)") {
    ExactPolynomial p = (x.pow(2) + one) * (x.pow(2) - x * Rat(3) + one);
    RootSet rs = find_roots(p);
    for (size_t i = 1; i < rs.roots.size(); ++i) {
        double m0 = std::abs(cd(rs.roots[i - 1])), m1 = std::abs(cd(rs.roots[i]));
        CHECK(m0 <= m1 + 1e-12);
    }
}

TEST_CASE("reciprocal pairing on a palindromic polynomial") {
    // (x^2 - 3x + 1)(x^2 + x + 1): palindromic, roots phi^2-ish pairs and unit pair
    ExactPolynomial p = (x.pow(2) - x * Rat(3) + one) * (x.pow(2) + x + one);
    ReciprocalPairs rp = pair_reciprocal_roots(find_roots(p));
    CHECK(rp.pairs.size() == 2);
    CHECK(rp.self_paired.empty());
    for (const auto& [a, b] : rp.pairs)
        CHECK(std::abs(cd(a) * cd(b) - 1.0) < 1e-9);
}

TEST_CASE("pairing failure on a non-palindromic polynomial") {
    CHECK_THROWS_AS(pair_reciprocal_roots(find_roots((x - ExactPolynomial(Rat(2))) * (x - ExactPolynomial(Rat(3))))),
                    PairingFailure);
}
