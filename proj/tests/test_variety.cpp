#include "doctest.h"
#include "torsionlab/variety.hpp"

#include <cmath>

using namespace torsionlab;

TEST_CASE("Q_M is palindromic") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 6},
             {Family::FigureEightPOverOne, -5},
             {Family::FigureEightOneOverQ, 3},
             {Family::FigureEightOneOverQ, -2},
             {Family::FiveTwoOneOverQ, 2},
             {Family::FiveTwoOneOverQ, -3}}) {
        ExactPolynomial q = build_qm(f, par).without_shift();
        ExactPolynomial rev = q.reverse();
        CAPTURE(family_name(f));
        CAPTURE(par);
        CHECK((q == rev || q == -rev));
    }
}

TEST_CASE("domain D membership") {
    CHECK(in_domain_d({0.3, -0.4}));
    CHECK(in_domain_d({0.0, 1.0}));            // i on the upper semicircle
    CHECK(in_domain_d({0.0, -1.0}));           // -i explicitly included
    CHECK(!in_domain_d({1.0, 0.0}));           // +1 on the circle, Im = 0
    CHECK(!in_domain_d({0.6, -0.8}));          // lower semicircle
    CHECK(!in_domain_d({1.2, 0.1}));           // outside
}

TEST_CASE("p = 4 variety is exactly +-i") {
    auto pts = variety_points(Family::FigureEightPOverOne, 4);
    REQUIRE(pts.size() == 2);
    for (Cplx a : pts) {
        CHECK(std::abs(a.real()) < 1e-12);
        CHECK(std::abs(std::abs(a.imag()) - 1.0) < 1e-12);
    }
}

TEST_CASE("1/2 surgery point count matches the root bookkeeping") {
    // degree 16, double root at -1 removed, reciprocal pairs halved
    auto pts = variety_points(Family::FigureEightOneOverQ, 2);
    CHECK(pts.size() == 7);
}

TEST_CASE("every variety point is in D with small relator residuals") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 7},
             {Family::FigureEightPOverOne, -6},
             {Family::FigureEightOneOverQ, -3},
             {Family::FiveTwoOneOverQ, 3},
             {Family::FiveTwoOneOverQ, -2}}) {
        CAPTURE(family_name(f));
        CAPTURE(par);
        for (Cplx a : variety_points(f, par)) {
            CHECK(in_domain_d(a, 1e-7));
            Representation rep = reconstruct_representation(a, f, par);
            CHECK(rep.worst_residual() < 1e-9);
            for (const Mat2& m : rep.matrices)
                CHECK(std::abs(m.determinant() - Cplx(1.0, 0.0)) < 1e-9);
        }
    }
}

TEST_CASE("representations are irreducible (no common eigenvector scale)") {
    // reducible pairs commute; check a commutator stays away from the identity
    for (Cplx a : variety_points(Family::FigureEightPOverOne, 5)) {
        Representation rep = reconstruct_representation(a, Family::FigureEightPOverOne, 5);
        REQUIRE(rep.matrices.size() >= 2);
        Mat2 c = rep.matrices[0] * rep.matrices[1] -
                 rep.matrices[1] * rep.matrices[0];
        CHECK(c.norm() > 1e-6);
    }
}

TEST_CASE("adjoint preserves the Killing gram matrix") {
    Mat2 m;
    m << Cplx(0.8, 0.1), Cplx(0.3, -0.2), Cplx(-0.1, 0.4), Cplx(1.0, 0.0);
    // normalize to SL2
    m /= std::sqrt(m.determinant());
    Mat3 ad = adjoint(m);
    Mat3 g = killing_gram();
    CHECK((ad.transpose() * g * ad - g).norm() < 1e-12);
}
