#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "json.hpp"

namespace torsionlab {

namespace {

Cplx eval_poly(const ExactPolynomial& p, Cplx a) {
    if (p.is_zero()) return {0.0, 0.0};
    Cplx v(0.0, 0.0);
    for (long i = p.degree(); i >= 0; --i) v = v * a + Cplx(p.coeff(i).get_d());
    return v * std::pow(a, Cplx(static_cast<double>(p.shift())));
}

Cplx ipow(Cplx a, long e) { return std::pow(a, Cplx(static_cast<double>(e))); }

}  // namespace

ExactPolynomial five_two_p_poly(long q) {
    const Rat Q(q);
    auto add = [](std::map<long, Rat>& t, long e, Rat c) { t[e] += c; };
    std::map<long, Rat> t;
    // rows are the a^{2kq} groups of the printed definition; two rows print a
    // duplicated power of a, read here as (constant, linear) in that order
    add(t, 0, 1 - 2 * Q);
    add(t, 1, 28 * Q + 2);
    add(t, 2, 3 - 42 * Q);
    add(t, 3, 36 * Q - 8);
    add(t, 4, 2 - 20 * Q);
    long b = 2 * q;
    add(t, b - 1, 4 * Q - 1);
    add(t, b + 0, 18 * Q - 3);
    add(t, b + 1, 3 - 32 * Q);
    add(t, b + 2, 4 - 54 * Q);
    add(t, b + 3, Rat(-2));
    add(t, b + 4, 8 * Q - 1);
    b = 4 * q;
    add(t, b - 1, 1 - 4 * Q);
    add(t, b + 0, -10 * Q);
    add(t, b + 1, -8 * Q - 3);
    add(t, b + 2, 38 * Q - 4);
    add(t, b + 3, 5 - 34 * Q);
    add(t, b + 4, 1 - 10 * Q);
    b = 6 * q;
    add(t, b - 1, 10 * Q - 1);
    add(t, b + 0, 18 * Q + 2);
    add(t, b + 1, 7 - 56 * Q);
    add(t, b + 2, 74 * Q - 8);
    add(t, b + 3, 10 * Q);
    b = 8 * q;
    add(t, b - 1, 14 * Q - 3);
    add(t, b + 0, 18 * Q);
    add(t, b + 1, 9 - 76 * Q);
    add(t, b + 2, Rat(-3));
    add(t, b + 3, 16 * Q - 3);
    b = 10 * q;
    add(t, b - 1, 24 * Q - 2);
    add(t, b + 0, 1 - 10 * Q);
    add(t, b + 1, 2 - 52 * Q);
    add(t, b + 2, -18 * Q - 1);
    b = 12 * q;
    add(t, b - 2, 4 * Q - 1);
    add(t, b - 1, 8 * Q);
    add(t, b + 0, 5 - 62 * Q);
    add(t, b + 1, 56 * Q - 6);
    add(t, b + 2, 2 - 6 * Q);
    return ExactPolynomial::from_laurent(t);
}

Cplx torsion_closed_form(Cplx a, Family family, long parameter) {
    const Cplx a2 = a * a;
    switch (family) {
        case Family::FigureEightPOverOne: {
            const double p = static_cast<double>(parameter);
            if (std::abs(a2 + 1.0) < 1e-8) {
                if (parameter % 4 != 0)
                    throw BranchDomain("a = +-i is on the variety only when 4 | p");
                // sqrt(-5) := +i sqrt(5)
                return (10.0 + a * p * Cplx(0.0, std::sqrt(5.0))) / 8.0;
            }
            Cplx a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
            Cplx num = 4.0 - p + (p - 2.0) * a2 + 2.0 * p * a4 + (2.0 + p) * a6 -
                       (4.0 + p) * a8 + 2.0 * p * ipow(a, 4 + parameter);
            return -num / (2.0 * std::pow(a2 - 1.0, 3.0) * (1.0 + a2));
        }
        case Family::FigureEightOneOverQ: {
            const double q = static_cast<double>(parameter);
            Cplx b = ipow(a, 2 * parameter);  // a^{2q}
            Cplx b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
            Cplx num = -1.0 + 4.0 * q + (1.0 - 2.0 * q) * b + 2.0 * (1.0 + a) * b2 +
                       (1.0 + 2.0 * q) * b3 - (1.0 + 4.0 * q) * b4;
            Cplx den = 2.0 * std::pow(b2 - 1.0, 3.0) * (1.0 - 2.0 * b - b2 - 2.0 * b3 + b4);
            return -b3 * num / den;
        }
        case Family::FiveTwoOneOverQ: {
            // tau = -a^2 P(a) / (2 (a^2-1)^4); the a^2 sits in the numerator,
            // calibrated against the chain complex and the vanishing identity
            Cplx P = eval_poly(five_two_p_poly(parameter), a);
            return -a2 * P / (2.0 * std::pow(a2 - 1.0, 4.0));
        }
    }
    throw UnsupportedFamily("unknown family");
}

InverseTorsionForm inverse_torsion_form(Family family, long parameter) {
    const ExactPolynomial x = ExactPolynomial::x();
    const ExactPolynomial one = ExactPolynomial::one();
    switch (family) {
        case Family::FigureEightPOverOne: {
            ExactPolynomial n = (one - x.pow(2)).pow(3) * (one + x.pow(2)) *
                                ExactPolynomial::monomial(parameter - 5, Rat(2));
            return {n, build_qm(family, parameter).derivative()};
        }
        case Family::FigureEightOneOverQ: {
            long q = parameter;
            ExactPolynomial a4q = ExactPolynomial::monomial(4 * q, Rat(1));
            ExactPolynomial mid = a4q -
                                  (x.pow(2) + x + one) * ExactPolynomial::monomial(2 * q - 1, Rat(1)) +
                                  one;
            // the overall sign is fixed so that the form equals 1/tau, not -1/tau
            ExactPolynomial n = (a4q - one).pow(3) * mid * ExactPolynomial(Rat(-2));
            ExactPolynomial v =
                (ExactPolynomial::monomial(4 * q + 1, Rat(1)) * build_qm(family, parameter))
                    .derivative();
            return {n, v};
        }
        case Family::FiveTwoOneOverQ: {
            ExactPolynomial n = (x.pow(2) - one).pow(4) * ExactPolynomial(Rat(-2));
            ExactPolynomial v = ExactPolynomial::monomial(2, Rat(1)) * five_two_p_poly(parameter);
            return {n, v};
        }
    }
    throw UnsupportedFamily("unknown family");
}

Cplx torsion_inverse_rational(Cplx a, Family family, long parameter) {
    auto form = inverse_torsion_form(family, parameter);
    Cplx v = eval_poly(form.denominator, a);
    if (std::abs(v) < 1e-9)
        throw DerivativeVanishes("denominator of the 1/tau form vanishes (repeated root?)");
    return eval_poly(form.numerator, a) / v;
}

namespace {

using Eigen::MatrixXcd;

Mat3 adjoint_of_ring(const GroupRingElement& e, const std::vector<Mat2>& images) {
    Mat3 out = Mat3::Zero();
    for (const auto& [w, c] : e.terms()) out += c.get_d() * adjoint(eval_word(w, images));
    return out;
}

struct ChainMatrices {
    MatrixXcd U;  // 3 x 3g, blocks A(psi dW/drho_j)
    MatrixXcd V;  // 3g x 3g, block (j,i) = A(dr_j/dx_i)
    MatrixXcd M;  // 3g x 3, block i = A(x_i - 1)
    int g = 0;
};

ChainMatrices build_chain(const Representation& rep) {
    SurgeryPresentation pres = build_presentation(rep.family, rep.parameter);
    Differentials dif = symbolic_differentials(pres);
    const int g = pres.generator_count;
    ChainMatrices cm;
    cm.g = g;
    cm.U.resize(3, 3 * g);
    cm.V.resize(3 * g, 3 * g);
    cm.M.resize(3 * g, 3);
    for (int j = 0; j < g; ++j)
        cm.U.block(0, 3 * j, 3, 3) = adjoint_of_ring(dif.delta3[static_cast<size_t>(j)], rep.matrices);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i)
            cm.V.block(3 * j, 3 * i, 3, 3) =
                adjoint_of_ring(dif.delta2[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                rep.matrices);
    for (int i = 0; i < g; ++i)
        cm.M.block(3 * i, 0, 3, 3) = -adjoint_of_ring(dif.delta1[static_cast<size_t>(i)],
                                                      rep.matrices);  // A(x_i - 1)
    return cm;
}

void check_chain(const ChainMatrices& cm) {
    double scale = std::max({cm.U.norm(), cm.V.norm(), cm.M.norm(), 1.0});
    double uv = (cm.U * cm.V).norm() / scale;
    double vm = (cm.V * cm.M).norm() / scale;
    if (uv > 1e-9 || vm > 1e-9) throw ChainConditionViolated(std::max(uv, vm));
}

double acyclicity_margin(const ChainMatrices& cm) {
    const int n = 3 * cm.g;
    Eigen::JacobiSVD<MatrixXcd> su(cm.U), sv(cm.V), sm(cm.M);
    double m = su.singularValues()(2);
    m = std::min(m, sv.singularValues()(n - 4));
    m = std::min(m, sm.singularValues()(2));
    // ranks must not exceed 3, n-3, 3
    if (sv.singularValues()(n - 3) > 1e-6) throw NotAcyclic(sv.singularValues()(n - 3));
    if (m < 1e-6) throw NotAcyclic(m);
    return m;
}

std::vector<int> complement(const std::vector<int>& s, int n) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int i : s) in[static_cast<size_t>(i)] = 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!in[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

MatrixXcd pick(const MatrixXcd& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    MatrixXcd out(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                a(rows[r], cols[c]);
    return out;
}

std::vector<int> all_indices(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// First k column indices of the pivoted QR of a.
std::vector<int> pivot_columns(const MatrixXcd& a, int k) {
    Eigen::ColPivHouseholderQR<MatrixXcd> qr(a);
    auto perm = qr.colsPermutation().indices();
    std::vector<int> cols;
    for (int i = 0; i < k; ++i) cols.push_back(perm(i));
    std::sort(cols.begin(), cols.end());
    return cols;
}

}  // namespace

Cplx torsion_chain_complex(const Representation& rep, std::optional<unsigned> subset_seed) {
    ChainMatrices cm = build_chain(rep);
    check_chain(cm);
    acyclicity_margin(cm);
    const int n = 3 * cm.g;

    // Turaev transition determinants with the subset bases embedded as unit
    // columns; the full determinants carry the permutation signs, which makes
    // the alternating product well-defined up to one global sign.
    auto evaluate = [&](const std::vector<int>& b1, const std::vector<int>& b2,
                        Cplx& tau) -> bool {
        MatrixXcd t0 = pick(cm.U, all_indices(3), b1);
        MatrixXcd t1 = MatrixXcd::Zero(n, n);
        t1.leftCols(n - 3) = pick(cm.V, all_indices(n), b2);
        for (int k = 0; k < 3; ++k) t1(b1[static_cast<size_t>(k)], n - 3 + k) = 1.0;
        MatrixXcd t2 = MatrixXcd::Zero(n, n);
        t2.leftCols(3) = cm.M;
        for (int k = 0; k < n - 3; ++k) t2(b2[static_cast<size_t>(k)], 3 + k) = 1.0;
        Cplx d0 = t0.determinant(), d1 = t1.determinant(), d2 = t2.determinant();
        double floor0 = 1e-8 * std::pow(std::max(t0.norm(), 1e-30), 3);
        double floor12 = 1e-10;
        if (std::abs(d0) < floor0 || std::abs(d1) < floor12 || std::abs(d2) < floor12)
            return false;
        // alternating product; the dimension sign is (-1)^g for this complex,
        // fixed once against the closed forms and frozen
        double sign = cm.g % 2 == 0 ? 1.0 : -1.0;
        tau = sign * d1 / (d0 * d2);
        return true;
    };

    Cplx tau;
    if (!subset_seed) {
        std::vector<int> b1 = pivot_columns(cm.U, 3);
        std::vector<int> b2 = pivot_columns(pick(cm.V, complement(b1, n), all_indices(n)), n - 3);
        if (evaluate(b1, b2, tau)) return tau;
        // fall through to randomized retries with a fixed seed
        subset_seed = 0u;
    }
    std::mt19937 rng(*subset_seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> idx = all_indices(n);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> b1(idx.begin(), idx.begin() + 3);
        std::sort(b1.begin(), b1.end());
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> b2(idx.begin(), idx.begin() + (n - 3));
        std::sort(b2.begin(), b2.end());
        if (evaluate(b1, b2, tau)) return tau;
    }
    throw NotAcyclic(0.0);
}

double chain_acyclicity_margin(const Representation& rep) {
    ChainMatrices cm = build_chain(rep);
    check_chain(cm);
    return acyclicity_margin(cm);
}

std::string TorsionRecord::csv_header() {
    return "family,parameter,re_a,im_a,re_tau_cf,im_tau_cf,re_tau_cc,im_tau_cc,ratio,residual";
}

namespace {
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

std::string TorsionRecord::to_csv() const {
    std::string s = family_name(family) + "," + std::to_string(parameter);
    for (double v : {a.real(), a.imag(), closed_form.real(), closed_form.imag(),
                     chain_complex.real(), chain_complex.imag(), ratio, residual})
        s += "," + fmt17(v);
    return s;
}

std::string TorsionRecord::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["parameter"] = parameter;
    j["a"] = {{"re", a.real()}, {"im", a.imag()}};
    j["tau_closed_form"] = {{"re", closed_form.real()}, {"im", closed_form.imag()}};
    j["tau_chain_complex"] = {{"re", chain_complex.real()}, {"im", chain_complex.imag()}};
    j["ratio"] = ratio;
    j["residual"] = residual;
    return j.dump();
}

std::vector<TorsionRecord> torsion_table(Family family, long parameter, bool strict) {
    std::vector<TorsionRecord> out;
    for (Cplx a : variety_points(family, parameter)) {
        Representation rep = reconstruct_representation(a, family, parameter);
        TorsionRecord rec;
        rec.family = family;
        rec.parameter = parameter;
        rec.a = a;
        rec.closed_form = torsion_closed_form(a, family, parameter);
        rec.chain_complex = torsion_chain_complex(rep);
        Cplx r = rec.closed_form / rec.chain_complex;
        rec.ratio = r.real();
        rec.residual = rep.worst_residual();
        if (strict) {
            double rel = std::abs(std::abs(rec.closed_form) - std::abs(rec.chain_complex)) /
                         std::abs(rec.closed_form);
            if (rel > 1e-7 || std::abs(r.imag()) > 1e-6 ||
                std::fabs(std::fabs(rec.ratio) - 1.0) > 1e-6)
                throw std::runtime_error("closed-form / chain-complex cross-check failed at a=(" +
                                         fmt17(a.real()) + "," + fmt17(a.imag()) + ")");
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace torsionlab
