#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

/// Univariate polynomial with exact rational coefficients and a Laurent
/// normalization shift: the represented value is x^shift * sum c_i x^i.
/// After normalization the constant term of the stored part is nonzero.
class ExactPolynomial {
   public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(Rat constant);
    explicit ExactPolynomial(std::vector<Rat> coeffs, long shift = 0);

    static ExactPolynomial zero() { return ExactPolynomial(); }
    static ExactPolynomial one() { return ExactPolynomial(Rat(1)); }
    static ExactPolynomial x() { return monomial(1, Rat(1)); }
    static ExactPolynomial monomial(long exponent, Rat c);
    static ExactPolynomial from_laurent(const std::map<long, Rat>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the stored (normalized) part; -1 for the zero polynomial
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    long shift() const { return shift_; }
    const Rat& coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    // drops the Laurent shift (treats the stored part as the value)
    ExactPolynomial without_shift() const;
    ExactPolynomial with_shift(long s) const;

    ExactPolynomial operator-() const;
    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const Rat& c) const;
    bool operator==(const ExactPolynomial& o) const;

    ExactPolynomial pow(unsigned n) const;

    /// Formal derivative of the represented Laurent value:
    /// d/dx (x^s f) = x^(s-1) (s f + x f').
    ExactPolynomial derivative() const;

    ExactPolynomial reverse() const;

    Rat eval(const Rat& at) const;  // evaluates the full Laurent value

    std::string to_string() const;
    std::string to_json() const;
    static ExactPolynomial from_json(const std::string& s);

   private:
    void normalize();
    std::vector<Rat> coeffs_;
    long shift_ = 0;
};

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(ExactPolynomial rem)
        : std::runtime_error("polynomial division left a nonzero remainder"),
          remainder(std::move(rem)) {}
    ExactPolynomial remainder;
};

struct NotCoprime : std::runtime_error {
    explicit NotCoprime(ExactPolynomial g)
        : std::runtime_error("arguments share a nontrivial common factor"),
          common(std::move(g)) {}
    ExactPolynomial common;
};

// quotient/remainder on the stored parts; shifts subtract
struct DivMod {
    ExactPolynomial quotient;
    ExactPolynomial remainder;
};
DivMod divmod(const ExactPolynomial& p, const ExactPolynomial& d);

// exact division; throws NotDivisible carrying the remainder
ExactPolynomial divide_exact(const ExactPolynomial& p, const ExactPolynomial& d);

// monic gcd over the rationals (shifts ignored)
ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b);

// extended Euclid: g = s*a + t*b with g monic (or zero)
struct ExtGcd {
    ExactPolynomial g, s, t;
};
ExtGcd ext_gcd(const ExactPolynomial& a, const ExactPolynomial& b);

ExactPolynomial poly_mod(const ExactPolynomial& a, const ExactPolynomial& k);
ExactPolynomial mulmod(const ExactPolynomial& a, const ExactPolynomial& b,
                       const ExactPolynomial& k);
// inverse of a modulo k; throws NotCoprime
ExactPolynomial inverse_mod(const ExactPolynomial& a, const ExactPolynomial& k);

// reduces a Laurent value modulo k (uses the inverse of x when shift < 0;
// requires k(0) != 0 in that case)
ExactPolynomial reduce_laurent_mod(const ExactPolynomial& a, const ExactPolynomial& k);

/// Power sums p_j = sum of a^j over the roots of k (with multiplicity),
/// j = 0..n, by the Girard-Newton recurrence. Exact.
std::vector<Rat> power_sums(const ExactPolynomial& k, long n);

/// Square-free (Yun) decomposition: returns factors f_1, f_2, ... with
/// p ~ prod f_i^i up to a constant; each f_i square-free, pairwise coprime.
std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p);

bool is_squarefree(const ExactPolynomial& p);

/// Sum over the roots a of k of (1+a^eps)^eta g(a) / D'(a) with
/// D = (1+x^eps)^eta k, computed exactly via the companion matrix of k.
/// Preconditions: k square-free, k(0) != 0, eta in {0,1,2}, eps in {1,2},
/// wrapper coprime to k. Throws NotCoprime when gcd(D', k) != 1.
Rat sum_rational_over_roots_exact(const ExactPolynomial& k, const ExactPolynomial& g,
                                  int eta, int eps);

/// Sum over the roots of (square-free) k of u(a)/v(a) for Laurent u, v with
/// gcd(v, k) = 1. Exact, via trace of (u v^-1 mod k) on the companion matrix.
Rat sum_ratfun_over_roots(const ExactPolynomial& k, const ExactPolynomial& u,
                          const ExactPolynomial& v);

}  // namespace torsionlab
