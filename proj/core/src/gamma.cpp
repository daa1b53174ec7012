#include "ratiolab/gamma.hpp"

#include <cmath>

#include "ratiolab/errors.hpp"

namespace ratiolab {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

Complex log_gamma_lanczos(Complex z) {
    // valid for Re z >= 0.5
    Complex sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z + Complex(k - 1));
    Complex base = z + (kLanczosG - 0.5);
    return kHalfLogTwoPi + (z - 0.5) * std::log(base) - base + std::log(sum);
}

}  // namespace

Complex log_sin(Complex z) {
    double y = z.imag();
    if (std::abs(y) < 18.0) return std::log(std::sin(z));
    // Im z >> 0: sin z = e^{-iz}(1 - e^{2iz}) / (-2i); mirrored below.
    const Complex i(0.0, 1.0);
    if (y > 0.0)
        return -i * z + std::log(1.0 - std::exp(2.0 * i * z)) - std::log(-2.0 * i);
    return i * z + std::log(1.0 - std::exp(-2.0 * i * z)) - std::log(2.0 * i);
}

Complex log_gamma(Complex z) {
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: Gamma(z)Gamma(1-z) = pi / sin(pi z)
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw PolePoint("log_gamma: nonpositive integer argument");
    return std::log(kPi) - log_sin(kPi * z) - log_gamma_lanczos(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex g_factor(GVariant variant, Complex s) {
    Complex num, den;
    switch (variant) {
        case GVariant::Plus:
            num = (1.0 - s) / 2.0;
            den = s / 2.0;
            break;
        case GVariant::Minus:
            num = (2.0 - s) / 2.0;
            den = (s + 1.0) / 2.0;
            break;
        case GVariant::Elliptic:
            num = 1.0 - s;
            den = s;
            break;
    }
    auto near_pole = [](Complex z) {
        return z.imag() == 0.0 && z.real() <= 0.0 &&
               std::abs(z.real() - std::round(z.real())) < 1e-12;
    };
    if (near_pole(num) || near_pole(den))
        throw PolePoint("g_factor: Gamma argument at a nonpositive integer");
    return std::exp(log_gamma(num) - log_gamma(den));
}

Complex gamma_ratio_weight2(Complex s) {
    return std::exp(log_gamma(1.5 - s) - log_gamma(s + 0.5));
}

namespace {

// Lower incomplete gamma by series: gamma(s,x) = x^s e^{-x} sum x^n / (s)_{n+1}
Complex lower_gamma_series(Complex s, double x) {
    Complex term = 1.0 / s;
    Complex sum = term;
    for (int n = 1; n < 600; ++n) {
        term *= x / (s + Complex(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(s * std::log(Complex(x)) - x) * sum;
}

// Continued-fraction part of the upper incomplete gamma (Lentz):
// Gamma(s,x) = x^s e^{-x} * cf(s,x).
Complex upper_gamma_cf(Complex s, double x) {
    const double tiny = 1e-300;
    Complex b = x + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < 600; ++i) {
        Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

bool use_cf(Complex s, double x) { return x > s.real() + 1.0 || x > 40.0; }

}  // namespace

Complex upper_incomplete_gamma(Complex s, double x) {
    if (x < 0.0) throw AccuracyLoss("upper_incomplete_gamma: x < 0");
    if (x == 0.0) {
        if (s.real() <= 0.0) throw PolePoint("upper_incomplete_gamma: Gamma(s,0) needs Re s > 0");
        return gamma_fn(s);
    }
    if (use_cf(s, x))
        return std::exp(s * std::log(Complex(x)) - x) * upper_gamma_cf(s, x);
    return gamma_fn(s) - lower_gamma_series(s, x);
}

Complex upper_incomplete_gamma_regularized(Complex s, double x) {
    if (x == 0.0) return Complex(1.0);
    if (use_cf(s, x))
        return std::exp(s * std::log(Complex(x)) - x - log_gamma(s)) * upper_gamma_cf(s, x);
    return 1.0 - lower_gamma_series(s, x) * std::exp(-log_gamma(s));
}

}  // namespace ratiolab
