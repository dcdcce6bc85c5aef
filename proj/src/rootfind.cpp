#include "torsionlab/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace torsionlab {

namespace {

struct CDouble {
    using complex = std::complex<double>;
    static complex from_rat(const Rat& q) { return {q.get_d(), 0.0}; }
    static double absval(complex z) { return std::abs(z); }
    static constexpr double sweep_tol = 1e-14;
};

struct CDd {
    using complex = ddc;
    static ddc from_rat(const Rat& q) { return ddc_from_rat(q); }
    static double absval(ddc z) { return abs(z).to_double(); }
    static constexpr double sweep_tol = 1e-28;
};

template <class P>
typename P::complex horner(const std::vector<typename P::complex>& c, typename P::complex z) {
    typename P::complex v = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) v = v * z + c[i];
    return v;
}

double fujiwara_bound(const std::vector<double>& mags) {
    // mags[i] = |c_i|, leading nonzero
    size_t n = mags.size() - 1;
    double lead = mags[n];
    double bound = 0.0;
    for (size_t k = 1; k <= n; ++k) {
        double m = mags[n - k] / lead;
        if (k == n) m *= 0.5;  // Fujiwara halves the constant term
        bound = std::max(bound, std::pow(m, 1.0 / static_cast<double>(k)));
    }
    return 2.0 * bound;
}

template <class P>
std::vector<typename P::complex> aberth(const std::vector<typename P::complex>& c,
                                        double outer, double inner) {
    using C = typename P::complex;
    const size_t n = c.size() - 1;
    std::vector<C> dc(n);
    for (size_t i = 1; i <= n; ++i) dc[i - 1] = c[i] * C(static_cast<double>(i), 0.0);

    // deterministic starts on two concentric circles
    std::vector<C> z(n);
    double r1 = outer;
    double r2 = std::max(inner, 0.25 * outer);
    for (size_t j = 0; j < n; ++j) {
        double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.7;
        double r = (j % 2 == 0) ? r1 : r2;
        z[j] = C(r * std::cos(th), r * std::sin(th));
    }

    for (int sweep = 0; sweep < 200; ++sweep) {
        double worst = 0.0;
        for (size_t j = 0; j < n; ++j) {
            C pv = horner<P>(c, z[j]);
            C dv = horner<P>(dc, z[j]);
            if (P::absval(dv) == 0.0) {
                z[j] = z[j] + C(1e-6, 1e-6);
                worst = 1.0;
                continue;
            }
            C N = pv / dv;
            C S(0.0, 0.0);
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                S = S + C(1.0, 0.0) / (z[j] - z[k]);
            }
            C denom = C(1.0, 0.0) - N * S;
            C w = (P::absval(denom) == 0.0) ? N : N / denom;
            z[j] = z[j] - w;
            worst = std::max(worst, P::absval(w) / (P::absval(z[j]) + 1.0));
        }
        if (worst < P::sweep_tol) break;
    }
    return z;
}

ddc newton_polish(const std::vector<ddc>& c, const std::vector<ddc>& dc, ddc z) {
    for (int it = 0; it < 50; ++it) {
        ddc pv = horner<CDd>(c, z);
        ddc dv = horner<CDd>(dc, z);
        if (abs(dv).to_double() == 0.0) break;
        ddc step = pv / dv;
        z = z - step;
        if (abs(step).to_double() < 1e-30 * (abs(z).to_double() + 1.0)) break;
    }
    return z;
}

std::vector<ddc> roots_of_factor(const ExactPolynomial& f, Precision prec) {
    const long n = f.degree();
    std::vector<ddc> cd(static_cast<size_t>(n + 1));
    std::vector<double> mags(static_cast<size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        cd[static_cast<size_t>(i)] = ddc_from_rat(f.coeff(i));
        mags[static_cast<size_t>(i)] = std::fabs(f.coeff(i).get_d());
    }
    std::vector<ddc> dcd(static_cast<size_t>(n));
    for (long i = 1; i <= n; ++i) dcd[static_cast<size_t>(i - 1)] = cd[static_cast<size_t>(i)] * ddc(static_cast<double>(i), 0.0);

    if (n == 1) return {-cd[0] / cd[1]};

    double outer = fujiwara_bound(mags);
    std::vector<double> rmags(mags.rbegin(), mags.rend());
    double inner = 1.0 / fujiwara_bound(rmags);

    bool use_dd = prec == Precision::DoubleDouble || (prec == Precision::Auto && n > 60);
    std::vector<ddc> z;
    if (use_dd) {
        z = aberth<CDd>(cd, outer, inner);
    } else {
        std::vector<std::complex<double>> c2(cd.size());
        for (size_t i = 0; i < cd.size(); ++i) c2[i] = cd[i].to_complex();
        auto zd = aberth<CDouble>(c2, outer, inner);
        z.assign(zd.begin(), zd.end());
    }
    for (auto& r : z) r = newton_polish(cd, dcd, r);
    return z;
}

}  // namespace

RootSet find_roots(const ExactPolynomial& p, Precision prec) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("find_roots requires a nonzero polynomial of degree >= 1");
    ExactPolynomial f = p.without_shift();  // roots of the normalized part

    RootSet rs;
    rs.degree = f.shift() + f.degree();  // shift may reappear via stray low zeros
    // full-polynomial data for residuals
    std::vector<ddc> full(static_cast<size_t>(rs.degree + 1));
    double maxc = 0.0;
    for (long i = 0; i <= f.degree(); ++i) {
        full[static_cast<size_t>(f.shift() + i)] = ddc_from_rat(f.coeff(i));
        maxc = std::max(maxc, std::fabs(f.coeff(i).get_d()));
    }

    auto factors = squarefree_decomposition(f);
    double worst = 0.0;
    for (size_t m = 0; m < factors.size(); ++m) {
        if (factors[m].degree() < 1) continue;
        for (const ddc& z : roots_of_factor(factors[m], prec)) {
            double az = abs(z).to_double();
            double res = abs(horner<CDd>(full, z)).to_double() /
                         (maxc * std::pow(std::max(1.0, az), static_cast<double>(rs.degree)));
            worst = std::max(worst, res);
            rs.roots.push_back({z, static_cast<int>(m + 1), res});
        }
    }
    if (worst > 1e-10) throw ConvergenceFailure(worst);

    std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
        double ra = abs(a.value).to_double(), rb = abs(b.value).to_double();
        if (std::fabs(ra - rb) > 1e-13) return ra < rb;
        return std::atan2(a.value.im.to_double(), a.value.re.to_double()) <
               std::atan2(b.value.im.to_double(), b.value.re.to_double());
    });

    long total = 0;
    for (const auto& r : rs.roots) total += r.multiplicity;
    if (total != rs.degree) throw ConvergenceFailure(1.0);
    return rs;
}

std::string RootSet::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : roots) {
        nlohmann::json j;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", r.value.re.to_double());
        j["re"] = std::stod(buf);
        std::snprintf(buf, sizeof buf, "%.17g", r.value.im.to_double());
        j["im"] = std::stod(buf);
        j["mult"] = r.multiplicity;
        j["residual"] = r.residual;
        arr.push_back(j);
    }
    return arr.dump();
}

ReciprocalPairs pair_reciprocal_roots(const RootSet& rs) {
    // expand by multiplicity
    std::vector<ddc> pool;
    for (const auto& r : rs.roots)
        for (int m = 0; m < r.multiplicity; ++m) pool.push_back(r.value);

    std::vector<bool> used(pool.size(), false);
    ReciprocalPairs out;
    const double tol = 1e-9;
    for (size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        ddc inv = ddc(1.0, 0.0) / pool[i];
        // self-paired only at +-1
        if (abs(pool[i] - inv).to_double() < tol) {
            used[i] = true;
            out.self_paired.push_back(pool[i]);
            continue;
        }
        size_t best = pool.size();
        double bestd = tol * (abs(inv).to_double() + 1.0);
        for (size_t j = 0; j < pool.size(); ++j) {
            if (j == i || used[j]) continue;
            double d = abs(pool[j] - inv).to_double();
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best == pool.size()) throw PairingFailure(pool[i]);
        used[i] = used[best] = true;
        out.pairs.emplace_back(pool[i], pool[best]);
    }
    return out;
}

}  // namespace torsionlab
