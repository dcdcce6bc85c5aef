#include "torsionlab/exactpoly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace torsionlab {

namespace {

const Rat kZero(0);

// materializes the value coefficients [x^0 .. x^max]; rejects Laurent input
std::vector<Rat> value_vec(const ExactPolynomial& p) {
    if (p.shift() < 0) throw std::domain_error("operation requires a plain (non-Laurent) polynomial");
    std::vector<Rat> v(static_cast<size_t>(p.shift() + p.degree() + 1), Rat(0));
    for (long i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(p.shift() + i)] = p.coeff(i);
    return v;
}

}  // namespace

ExactPolynomial::ExactPolynomial(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

ExactPolynomial::ExactPolynomial(std::vector<Rat> coeffs, long shift)
    : coeffs_(std::move(coeffs)), shift_(shift) {
    normalize();
}

ExactPolynomial ExactPolynomial::monomial(long exponent, Rat c) {
    ExactPolynomial p;
    if (c == 0) return p;
    p.coeffs_.push_back(std::move(c));
    p.shift_ = exponent;
    return p;
}

ExactPolynomial ExactPolynomial::from_laurent(const std::map<long, Rat>& terms) {
    if (terms.empty()) return ExactPolynomial();
    long lo = terms.begin()->first;
    long hi = terms.rbegin()->first;
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, v] : terms) c[static_cast<size_t>(e - lo)] += v;
    return ExactPolynomial(std::move(c), lo);
}

void ExactPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) {
        shift_ = 0;
        return;
    }
    size_t lead0 = 0;
    while (coeffs_[lead0] == 0) ++lead0;
    if (lead0 > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead0));
        shift_ += static_cast<long>(lead0);
    }
}

const Rat& ExactPolynomial::coeff(long i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rat& ExactPolynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

ExactPolynomial ExactPolynomial::without_shift() const {
    ExactPolynomial p = *this;
    p.shift_ = 0;
    return p;
}

ExactPolynomial ExactPolynomial::with_shift(long s) const {
    ExactPolynomial p = *this;
    p.shift_ = s;
    return p;
}

ExactPolynomial ExactPolynomial::operator-() const {
    ExactPolynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(shift_, o.shift_);
    long hi = std::max(shift_ + degree(), o.shift_ + o.degree());
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (long i = 0; i <= degree(); ++i) c[static_cast<size_t>(shift_ + i - lo)] += coeffs_[static_cast<size_t>(i)];
    for (long i = 0; i <= o.degree(); ++i) c[static_cast<size_t>(o.shift_ + i - lo)] += o.coeffs_[static_cast<size_t>(i)];
    return ExactPolynomial(std::move(c), lo);
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const { return *this + (-o); }

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (is_zero() || o.is_zero()) return ExactPolynomial();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return ExactPolynomial(std::move(c), shift_ + o.shift_);
}

ExactPolynomial ExactPolynomial::operator*(const Rat& k) const {
    if (k == 0) return ExactPolynomial();
    ExactPolynomial p = *this;
    for (auto& c : p.coeffs_) c *= k;
    return p;
}

bool ExactPolynomial::operator==(const ExactPolynomial& o) const {
    return shift_ == o.shift_ && coeffs_ == o.coeffs_;
}

ExactPolynomial ExactPolynomial::pow(unsigned n) const {
    ExactPolynomial r = one();
    ExactPolynomial b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        b = b * b;
        n >>= 1u;
    }
    return r;
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (is_zero()) return ExactPolynomial();
    std::map<long, Rat> terms;
    for (long i = 0; i <= degree(); ++i) {
        long e = shift_ + i;
        if (e == 0) continue;
        terms[e - 1] += coeffs_[static_cast<size_t>(i)] * Rat(e);
    }
    return from_laurent(terms);
}

ExactPolynomial ExactPolynomial::reverse() const {
    ExactPolynomial p = *this;
    std::reverse(p.coeffs_.begin(), p.coeffs_.end());
    p.shift_ = 0;
    p.normalize();
    return p;
}

Rat ExactPolynomial::eval(const Rat& at) const {
    Rat v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * at + *it;
    if (shift_ > 0) {
        for (long i = 0; i < shift_; ++i) v *= at;
    } else if (shift_ < 0) {
        if (at == 0) throw std::domain_error("Laurent value has a pole at 0");
        for (long i = 0; i < -shift_; ++i) v /= at;
    }
    return v;
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= degree(); ++i) {
        const Rat& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        long e = shift_ + i;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "x";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string ExactPolynomial::to_json() const {
    nlohmann::json j;
    j["shift"] = shift_;
    auto arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(rat_to_string(c));
    j["coeffs"] = arr;
    return j.dump();
}

ExactPolynomial ExactPolynomial::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    std::vector<Rat> c;
    for (const auto& e : j.at("coeffs")) c.push_back(rat_from_string(e.get<std::string>()));
    return ExactPolynomial(std::move(c), j.at("shift").get<long>());
}

DivMod divmod(const ExactPolynomial& p, const ExactPolynomial& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Rat> rem = value_vec(p);
    std::vector<Rat> dc = value_vec(d);
    long dn = static_cast<long>(dc.size()) - 1;
    long pn = static_cast<long>(rem.size()) - 1;
    std::vector<Rat> quot;
    if (pn >= dn) quot.assign(static_cast<size_t>(pn - dn + 1), Rat(0));
    for (long i = pn; i >= dn; --i) {
        Rat f = rem[static_cast<size_t>(i)] / dc[static_cast<size_t>(dn)];
        if (f == 0) continue;
        quot[static_cast<size_t>(i - dn)] = f;
        for (long j = 0; j <= dn; ++j) rem[static_cast<size_t>(i - dn + j)] -= f * dc[static_cast<size_t>(j)];
    }
    return {ExactPolynomial(std::move(quot), 0), ExactPolynomial(std::move(rem), 0)};
}

ExactPolynomial divide_exact(const ExactPolynomial& p, const ExactPolynomial& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw NotDivisible(std::move(r));
    return q;
}

ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

ExtGcd ext_gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial r0 = a, r1 = b;
    ExactPolynomial s0 = ExactPolynomial::one(), s1 = ExactPolynomial::zero();
    ExactPolynomial t0 = ExactPolynomial::zero(), t1 = ExactPolynomial::one();
    while (!r1.is_zero()) {
        auto qr = divmod(r0, r1);
        ExactPolynomial s2 = s0 - qr.quotient * s1;
        ExactPolynomial t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1); r1 = std::move(qr.remainder);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.leading();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

ExactPolynomial poly_mod(const ExactPolynomial& a, const ExactPolynomial& k) {
    return divmod(a, k).remainder;
}

ExactPolynomial mulmod(const ExactPolynomial& a, const ExactPolynomial& b, const ExactPolynomial& k) {
    return poly_mod(a * b, k);
}

ExactPolynomial inverse_mod(const ExactPolynomial& a, const ExactPolynomial& k) {
    auto e = ext_gcd(poly_mod(a, k), k);
    if (e.g.degree() != 0) throw NotCoprime(std::move(e.g));
    return poly_mod(e.s, k);
}

ExactPolynomial reduce_laurent_mod(const ExactPolynomial& a, const ExactPolynomial& k) {
    if (a.shift() >= 0) return poly_mod(a, k);
    ExactPolynomial xinv = inverse_mod(ExactPolynomial::x(), k);
    ExactPolynomial r = poly_mod(a.without_shift(), k);
    return mulmod(r, xinv.pow(static_cast<unsigned>(-a.shift())), k);
}

std::vector<Rat> power_sums(const ExactPolynomial& k, long n) {
    if (k.is_zero()) throw std::domain_error("power sums of the zero polynomial");
    std::vector<Rat> kv = value_vec(k);
    long d = static_cast<long>(kv.size()) - 1;
    const Rat& lc = kv[static_cast<size_t>(d)];
    std::vector<Rat> c(static_cast<size_t>(d), Rat(0));
    for (long i = 0; i < d; ++i) c[static_cast<size_t>(i)] = kv[static_cast<size_t>(i)] / lc;
    std::vector<Rat> p(static_cast<size_t>(n + 1), Rat(0));
    p[0] = Rat(d);
    for (long m = 1; m <= n; ++m) {
        Rat acc(0);
        for (long i = 1; i < m && i <= d; ++i)
            acc += c[static_cast<size_t>(d - i)] * p[static_cast<size_t>(m - i)];
        if (m <= d) acc += Rat(m) * c[static_cast<size_t>(d - m)];
        p[static_cast<size_t>(m)] = -acc;
    }
    return p;
}

std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p) {
    // Yun's algorithm
    std::vector<ExactPolynomial> out;
    if (p.shift() + p.degree() < 1) return out;
    ExactPolynomial f = p;
    ExactPolynomial fp = f.derivative();
    ExactPolynomial a = poly_gcd(f, fp);
    ExactPolynomial b = divide_exact(f, a);
    ExactPolynomial c = divide_exact(fp, a);
    ExactPolynomial d = c - b.derivative();
    while (!(b.degree() + b.shift() == 0)) {
        ExactPolynomial fi = poly_gcd(b, d);
        out.push_back(fi);
        b = divide_exact(b, fi);
        c = divide_exact(d, fi);
        d = c - b.derivative();
    }
    return out;
}

bool is_squarefree(const ExactPolynomial& p) {
    if (p.shift() + p.degree() < 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

namespace {
Rat trace_on_companion(const ExactPolynomial& k, const ExactPolynomial& r) {
    auto ps = power_sums(k, std::max<long>(r.degree() + r.shift(), 0));
    Rat acc(0);
    for (long i = 0; i <= r.degree(); ++i) acc += r.coeff(i) * ps[static_cast<size_t>(r.shift() + i)];
    return acc;
}
}  // namespace

Rat sum_rational_over_roots_exact(const ExactPolynomial& k, const ExactPolynomial& g,
                                  int eta, int eps) {
    if (k.shift() + k.degree() < 1) throw std::domain_error("k must have positive degree");
    if (k.shift() > 0) throw std::domain_error("k(0) must be nonzero");
    if (eta < 0 || eta > 2 || eps < 1 || eps > 2) throw std::domain_error("eta in {0,1,2}, eps in {1,2}");
    ExactPolynomial w = (ExactPolynomial::one() + ExactPolynomial::monomial(eps, Rat(1))).pow(static_cast<unsigned>(eta));
    if (poly_gcd(w, k).degree() != 0)
        throw std::domain_error("wrapper (1+x^eps)^eta shares a root with k");
    ExactPolynomial D = w * k;
    ExactPolynomial u = inverse_mod(D.derivative(), k);  // NotCoprime when k has repeated roots
    ExactPolynomial r = mulmod(mulmod(w, g, k), u, k);
    return trace_on_companion(k, r);
}

Rat sum_ratfun_over_roots(const ExactPolynomial& k, const ExactPolynomial& u,
                          const ExactPolynomial& v) {
    ExactPolynomial vr = reduce_laurent_mod(v, k);
    ExactPolynomial r = mulmod(reduce_laurent_mod(u, k), inverse_mod(vr, k), k);
    return trace_on_companion(k, r);
}

}  // namespace torsionlab
