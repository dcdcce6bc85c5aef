#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/dd.hpp"
#include "torsionlab/exactpoly.hpp"

namespace torsionlab {

enum class Precision { Auto, Double, DoubleDouble };

struct Root {
    ddc value;
    int multiplicity = 1;
    double residual = 0.0;  // |p(a)| / (max|coeff| * max(1,|a|)^deg)
};

struct RootSet {
    std::vector<Root> roots;  // ordered by (|a|, arg a)
    long degree = 0;          // of the normalized source polynomial

    std::string to_json() const;
};

struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(double worst)
        : std::runtime_error("root iteration failed to converge"), worst_residual(worst) {}
    double worst_residual;
};

struct PairingFailure : std::runtime_error {
    explicit PairingFailure(ddc a)
        : std::runtime_error("root has no reciprocal partner"), unpaired(a) {}
    ddc unpaired;
};

/// All complex roots of the normalized part of p, with multiplicities from the
/// exact square-free decomposition. Aberth-Ehrlich simultaneous iteration on
/// each square-free factor, then Newton polishing in double-double.
RootSet find_roots(const ExactPolynomial& p, Precision prec = Precision::Auto);

struct ReciprocalPairs {
    std::vector<std::pair<ddc, ddc>> pairs;  // (a, 1/a), counted with multiplicity
    std::vector<ddc> self_paired;            // a with a = 1/a (i.e. a = +-1)
};

/// Matches every root with its reciprocal (tolerance 1e-9); the source
/// polynomial must be palindromic. Throws PairingFailure otherwise.
ReciprocalPairs pair_reciprocal_roots(const RootSet& rs);

}  // namespace torsionlab
