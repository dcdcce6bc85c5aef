#include "doctest.h"
#include "torsionlab/torsion.hpp"

#include <cmath>

using namespace torsionlab;

namespace {
Cplx eval(const ExactPolynomial& p, Cplx a) {
    Cplx v(0.0, 0.0);
    for (long i = p.degree(); i >= 0; --i) v = v * a + Cplx(p.coeff(i).get_d());
    return v * std::pow(a, Cplx(static_cast<double>(p.shift())));
}
}  // namespace

TEST_CASE("closed form and chain complex agree with constant ratio") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 5},
             {Family::FigureEightPOverOne, -6},
             {Family::FigureEightOneOverQ, 2},
             {Family::FigureEightOneOverQ, -2},
             {Family::FiveTwoOneOverQ, 2}}) {
        CAPTURE(family_name(f));
        CAPTURE(par);
        auto table = torsion_table(f, par, true);
        CHECK(!table.empty());
        for (const auto& rec : table) CHECK(std::abs(rec.ratio - table[0].ratio) < 1e-6);
    }
}

TEST_CASE("inverse rational form equals 1/tau on the variety") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 7},
             {Family::FigureEightOneOverQ, 3},
             {Family::FiveTwoOneOverQ, -2}}) {
        CAPTURE(family_name(f));
        CAPTURE(par);
        for (Cplx a : variety_points(f, par)) {
            Cplx tau = torsion_closed_form(a, f, par);
            Cplx inv = torsion_inverse_rational(a, f, par);
            CHECK(std::abs(inv * tau - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("p = 4 exceptional values at +-i") {
    double s5 = std::sqrt(5.0);
    Cplx ti = torsion_closed_form({0.0, 1.0}, Family::FigureEightPOverOne, 4);
    Cplx tmi = torsion_closed_form({0.0, -1.0}, Family::FigureEightPOverOne, 4);
    CHECK(std::abs(ti - Cplx((10.0 - 4.0 * s5) / 8.0, 0.0)) < 1e-12);
    CHECK(std::abs(tmi - Cplx((10.0 + 4.0 * s5) / 8.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(torsion_closed_form({0.0, 1.0}, Family::FigureEightPOverOne, 5),
                    BranchDomain);
}

TEST_CASE("5_2 numerator polynomial: degrees and reciprocal symmetry on the variety") {
    for (long q : {1L, 2L, 3L}) {
        ExactPolynomial p = five_two_p_poly(q);
        CHECK(p.shift() == 0);
        CHECK(p.degree() == 12 * q + 2);
    }
    for (long q : {-2L, -3L}) {
        ExactPolynomial p = five_two_p_poly(q);
        CHECK(p.shift() == 12 * q - 2);
        CHECK(p.shift() + p.degree() == 4);
    }
    // tau(a) = tau(1/a) forces a^4 P(1/a) = P(a) at roots of Q_M (not identically)
    ExactPolynomial p2 = five_two_p_poly(2);
    for (Cplx a : variety_points(Family::FiveTwoOneOverQ, 2)) {
        Cplx lhs = std::pow(a, Cplx(4.0)) * eval(p2, 1.0 / a);
        Cplx rhs = eval(p2, a);
        CHECK(std::abs(lhs - rhs) < 1e-7 * std::abs(rhs));
    }
}

TEST_CASE("chain torsion is stable under pivot-subset rechoice") {
    Cplx a = variety_points(Family::FigureEightPOverOne, 6)[0];
    Representation rep = reconstruct_representation(a, Family::FigureEightPOverOne, 6);
    Cplx base = torsion_chain_complex(rep);
    for (unsigned seed : {1u, 7u, 42u}) {
        Cplx alt = torsion_chain_complex(rep, seed);
        CHECK(std::abs(alt - base) / std::abs(base) < 1e-8);
    }
}

TEST_CASE("chain torsion is invariant under conjugation") {
    Cplx a = variety_points(Family::FigureEightOneOverQ, 2)[1];
    Representation rep = reconstruct_representation(a, Family::FigureEightOneOverQ, 2);
    Cplx base = torsion_chain_complex(rep);
    Mat2 s;
    s << Cplx(1.1, 0.2), Cplx(0.4, -0.3), Cplx(-0.2, 0.1), Cplx(0.9, 0.05);
    s /= std::sqrt(s.determinant());
    Mat2 si = s.inverse();
    Representation conj = rep;
    for (Mat2& m : conj.matrices) m = s * m * si;
    Cplx alt = torsion_chain_complex(conj);
    CHECK(std::abs(alt - base) / std::abs(base) < 1e-8);
}

TEST_CASE("acyclicity margin is positive on the variety") {
    Cplx a = variety_points(Family::FiveTwoOneOverQ, 2)[0];
    Representation rep = reconstruct_representation(a, Family::FiveTwoOneOverQ, 2);
    CHECK(chain_acyclicity_margin(rep) > 1e-6);
}

TEST_CASE("torsion record serialization") {
    auto table = torsion_table(Family::FigureEightPOverOne, 0, true);
    REQUIRE(table.size() == 4);
    CHECK(TorsionRecord::csv_header().rfind("family,", 0) == 0);
    for (const auto& rec : table) {
        CHECK(rec.to_csv().find("41:p/1") == 0);
        CHECK(rec.to_json().find("\"ratio\"") != std::string::npos);
    }
}
