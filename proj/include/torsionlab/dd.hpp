#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "torsionlab/rational.hpp"

namespace torsionlab {

/// Double-double real number (~31 significant digits), unevaluated sum hi+lo.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi; }
    explicit operator double() const { return hi; }
};

namespace detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, lo);
}
inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}
inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd fabs(dd a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

inline dd sqrt(dd a) {
    if (a.hi == 0) return {0, 0};
    double x = std::sqrt(a.hi);
    // one Newton step in dd doubles the accuracy of the double seed
    dd y(x);
    y = (y + a / y) * dd(0.5);
    y = (y + a / y) * dd(0.5);
    return y;
}

inline dd dd_from_rat(const Rat& q) {
    double hi = q.get_d();
    Rat rem = q - Rat(hi);
    return detail::quick_two_sum(hi, rem.get_d());
}

/// Complex number over dd components.
struct ddc {
    dd re, im;

    constexpr ddc() = default;
    ddc(dd r) : re(r) {}
    ddc(dd r, dd i) : re(r), im(i) {}
    ddc(double r, double i = 0.0) : re(r), im(i) {}
    ddc(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ddc operator+(ddc a, ddc b) { return {a.re + b.re, a.im + b.im}; }
inline ddc operator-(ddc a, ddc b) { return {a.re - b.re, a.im - b.im}; }
inline ddc operator-(ddc a) { return {-a.re, -a.im}; }
inline ddc operator*(ddc a, ddc b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddc operator/(ddc a, ddc b) {
    dd d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline ddc& operator+=(ddc& a, ddc b) { return a = a + b; }
inline ddc& operator-=(ddc& a, ddc b) { return a = a - b; }
inline ddc& operator*=(ddc& a, ddc b) { return a = a * b; }
inline ddc& operator/=(ddc& a, ddc b) { return a = a / b; }

inline ddc conj(ddc a) { return {a.re, -a.im}; }
inline dd norm(ddc a) { return a.re * a.re + a.im * a.im; }
inline dd abs(ddc a) { return sqrt(norm(a)); }

inline ddc ddc_from_rat(const Rat& re, const Rat& im = Rat(0)) {
    return {dd_from_rat(re), dd_from_rat(im)};
}

/// Integer power with Laurent exponents.
inline ddc pow_int(ddc base, long e) {
    bool inv = e < 0;
    unsigned long n = static_cast<unsigned long>(inv ? -e : e);
    ddc r(1.0, 0.0), b = base;
    while (n) {
        if (n & 1ul) r = r * b;
        b = b * b;
        n >>= 1ul;
    }
    return inv ? ddc(1.0, 0.0) / r : r;
}

}  // namespace torsionlab
