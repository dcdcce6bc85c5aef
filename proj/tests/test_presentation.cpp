#include "doctest.h"
#include "torsionlab/presentation.hpp"

using namespace torsionlab;

TEST_CASE("presentations have matching generator and relator counts") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 6},
             {Family::FigureEightPOverOne, -7},
             {Family::FigureEightOneOverQ, 3},
             {Family::FiveTwoOneOverQ, 2}}) {
        SurgeryPresentation p = build_presentation(f, par);
        CHECK(p.generator_count > 0);
        CHECK(p.relators.size() == static_cast<size_t>(p.generator_count));
    }
}

TEST_CASE("W word frees-reduces to the identity") {
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 5},
             {Family::FigureEightPOverOne, 0},
             {Family::FigureEightPOverOne, -8},
             {Family::FigureEightOneOverQ, 2},
             {Family::FigureEightOneOverQ, -3},
             {Family::FiveTwoOneOverQ, 2},
             {Family::FiveTwoOneOverQ, -2}}) {
        WWordReport rep = validate_w_word(build_presentation(f, par));
        CAPTURE(family_name(f));
        CAPTURE(par);
        CHECK(rep.reduces_to_identity);
        CHECK(rep.reduced_length == 0);
    }
}

TEST_CASE("differentials have the documented shapes") {
    SurgeryPresentation p = build_presentation(Family::FigureEightOneOverQ, 2);
    Differentials d = symbolic_differentials(p);
    size_t g = static_cast<size_t>(p.generator_count);
    CHECK(d.delta1.size() == g);
    CHECK(d.delta2.size() == g);
    for (const auto& row : d.delta2) CHECK(row.size() == g);
    CHECK(d.delta3.size() == g);
}

TEST_CASE("fox derivative of a relator against the fundamental identity") {
    // sum_i (dr/dx_i)(x_i - 1) = r - 1 in the group ring; check on each relator
    for (auto [f, par] : std::vector<std::pair<Family, long>>{
             {Family::FigureEightPOverOne, 3}, {Family::FiveTwoOneOverQ, 2}}) {
        SurgeryPresentation p = build_presentation(f, par);
        Differentials d = symbolic_differentials(p);
        size_t g = static_cast<size_t>(p.generator_count);
        for (size_t j = 0; j < g; ++j) {
            GroupRingElement sum;
            for (size_t i = 0; i < g; ++i) {
                GroupRingElement xi_minus_1 =
                    GroupRingElement(GroupWord::generator(static_cast<int>(i))) -
                    GroupRingElement::one();
                sum = sum + d.delta2[i][j] * xi_minus_1;
            }
            GroupRingElement rhs = GroupRingElement(p.relators[j]) - GroupRingElement::one();
            CHECK(sum == rhs);
        }
    }
}

TEST_CASE("unsupported family parameter is rejected") {
    CHECK_THROWS(build_presentation(Family::FigureEightOneOverQ, 0));
}
