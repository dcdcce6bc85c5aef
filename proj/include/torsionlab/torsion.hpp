#pragma once

#include <optional>

#include "torsionlab/variety.hpp"

namespace torsionlab {

struct BranchDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAcyclic : std::runtime_error {
    explicit NotAcyclic(double margin)
        : std::runtime_error("twisted complex is not acyclic"), smallest_singular(margin) {}
    double smallest_singular;
};
struct ChainConditionViolated : std::runtime_error {
    explicit ChainConditionViolated(double n)
        : std::runtime_error("delta o delta != 0"), norm(n) {}
    double norm;
};
struct DerivativeVanishes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form adjoint torsion at a variety point.
Cplx torsion_closed_form(Cplx a, Family family, long parameter);

/// The displayed rational form of 1/tau (valid at simple roots of Q_M).
Cplx torsion_inverse_rational(Cplx a, Family family, long parameter);

/// Exact Laurent polynomials with 1/tau = N(a)/V(a) on the variety.
struct InverseTorsionForm {
    ExactPolynomial numerator;
    ExactPolynomial denominator;
};
InverseTorsionForm inverse_torsion_form(Family family, long parameter);

/// The polynomial P of the 5_2 closed form tau = -a^2 P(a) / (2 (a^2-1)^4).
ExactPolynomial five_two_p_poly(long q);

/// Torsion of the based acyclic complex 0 -> g -> g^g -> g^g -> g -> 0 built
/// from the Fox differentials through the adjoint of rep. The optional seed
/// randomizes the admissible pivot subsets (default: greedy pivoting).
Cplx torsion_chain_complex(const Representation& rep,
                           std::optional<unsigned> subset_seed = std::nullopt);

/// Smallest retained singular value across the three boundary maps.
double chain_acyclicity_margin(const Representation& rep);

struct TorsionRecord {
    Family family;
    long parameter;
    Cplx a;
    Cplx closed_form;
    Cplx chain_complex;
    double ratio;     // closed_form / chain_complex, real within tolerance
    double residual;  // worst relator residual of the representation

    static std::string csv_header();
    std::string to_csv() const;
    std::string to_json() const;
};

/// Full per-root table for one manifold; throws on cross-check failure if
/// strict is set.
std::vector<TorsionRecord> torsion_table(Family family, long parameter, bool strict = true);

}  // namespace torsionlab
