#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace ratiolab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Second-order jet: carries f, f', f'' through arithmetic. Used to
// differentiate the Euler-Maclaurin zeta formula without rewriting it.
struct Jet2 {
    Complex f{0.0}, d1{0.0}, d2{0.0};

    Jet2() = default;
    Jet2(Complex value) : f(value) {}
    Jet2(Complex value, Complex deriv, Complex second) : f(value), d1(deriv), d2(second) {}

    static Jet2 variable(Complex value) { return Jet2(value, Complex(1.0), Complex(0.0)); }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.d1, -a.d2}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f, a.d1 * b.f + a.f * b.d1, a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}
inline Jet2 inv(const Jet2& a) {
    Complex w = 1.0 / a.f;
    Complex w2 = w * w;
    return {w, -a.d1 * w2, (2.0 * a.d1 * a.d1 * w - a.d2) * w2};
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 exp(const Jet2& a) {
    Complex e = std::exp(a.f);
    return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}
// c^a for a constant base: c^a = exp(a log c)
inline Jet2 cpow(Complex base, const Jet2& a) {
    Complex lg = std::log(base);
    return exp(Jet2(a.f * lg, a.d1 * lg, a.d2 * lg));
}

}  // namespace ratiolab
