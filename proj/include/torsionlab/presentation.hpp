#pragma once

#include <string>
#include <vector>

#include "torsionlab/words.hpp"

namespace torsionlab {

enum class Family { FigureEightPOverOne, FigureEightOneOverQ, FiveTwoOneOverQ };

std::string family_name(Family f);
std::string family_knot(Family f);  // "41" or "52"

struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Surgery presentation of pi_1: generators x_1..x_g of the free group F,
/// relators r_1..r_g, and the closing word W in the free product P*F.
/// In W, letters 0..g-1 are the x_i and letters g..2g-1 are the rho_j.
struct SurgeryPresentation {
    Family family;
    long parameter = 0;
    int generator_count = 0;
    std::vector<GroupWord> relators;
    GroupWord w_word;

    int rho(int j) const { return generator_count + j; }  // 0-based relator letter

    std::string to_json() const;
};

/// Presentation for the family; parameter is p (p/1) or q (1/q), q != 0.
SurgeryPresentation build_presentation(Family family, long parameter);

struct Differentials {
    // delta1[j]   = 1 - x_j                      (1 x g)
    // delta2[i][j] = d r_j / d x_i               (g x g)
    // delta3[i]   = psi(d W / d rho_i)           (g x 1)
    std::vector<GroupRingElement> delta1;
    std::vector<std::vector<GroupRingElement>> delta2;
    std::vector<GroupRingElement> delta3;
};

Differentials symbolic_differentials(const SurgeryPresentation& p);

struct WWordReport {
    bool reduces_to_identity = false;
    size_t reduced_length = 0;
    std::string reduced_word;
};

/// Checks that substituting r_j for rho_j in W frees-reduces to the empty
/// word. Failures are reported, not fatal; the numeric chain condition in the
/// torsion engine is the final gate.
WWordReport validate_w_word(const SurgeryPresentation& p);

}  // namespace torsionlab
