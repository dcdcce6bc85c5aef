#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "torsionlab/presentation.hpp"
#include "torsionlab/rootfind.hpp"

namespace torsionlab {

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Cplx = std::complex<double>;

struct NoValidSign : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NewtonDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The variety polynomial Q_M as a Laurent-normalized exact polynomial.
ExactPolynomial build_qm(Family family, long parameter);

/// Membership in the half-domain D: |a| < 1, or |a| = 1 with Im a > 0, or a = -i.
bool in_domain_d(Cplx a, double tol = 1e-9);

/// Distinct roots of Q_M in D, ordered by (|a|, arg a).
std::vector<Cplx> variety_points(Family family, long parameter,
                                 Precision prec = Precision::Auto);

/// Irreducible SL2(C) representation attached to an eigenvalue coordinate.
/// matrices[i] is the image of x_{i+1}; x_g-1 conventions follow the
/// presentation (x3 = meridian, x4 = dual meridian for 1/q families).
struct Representation {
    Family family;
    long parameter = 0;
    Cplx a;
    std::vector<Mat2> matrices;
    int eta = 0;  // sign used in the eigenvalue-coordinate formulas; 0 for the numeric path
    std::vector<double> residuals;  // ||phi(r_j) - I|| per relator

    double worst_residual() const;
    std::string to_json() const;
};

Representation reconstruct_representation(Cplx a, Family family, long parameter);

/// Product of generator images over a freely reduced word.
Mat2 eval_word(const GroupWord& w, const std::vector<Mat2>& images);

/// Matrix of X -> m X m^-1 on the ordered basis (H, E+F, E-F) of sl2.
Mat3 adjoint(const Mat2& m);

/// Gram matrix of the Killing form on (H, E+F, E-F): diag(8, 8, -8).
Mat3 killing_gram();

}  // namespace torsionlab
