#include "ratiolab/zeta.hpp"

#include <array>
#include <cmath>

#include "ratiolab/errors.hpp"

namespace ratiolab {

namespace {

constexpr int kBernMax = 30;

std::array<double, kBernMax + 1> build_bernoulli() {
    std::array<double, kBernMax + 1> b{};
    b[0] = 1.0;
    // exact rationals through B_30
    const double exact[] = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
        -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
        -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
        8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};
    for (int k = 1; k <= 15; ++k) b[k] = exact[k - 1];
    // beyond: B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k}
    for (int k = 16; k <= kBernMax; ++k) {
        double z = 1.0;
        for (int n = 2; n <= 40; ++n) z += std::pow(static_cast<double>(n), -2.0 * k);
        double fact = 1.0;
        for (int j = 2; j <= 2 * k; ++j) fact *= j;
        b[k] = ((k % 2) ? 2.0 : -2.0) * fact * z / std::pow(kTwoPi, 2.0 * k);
    }
    return b;
}

const std::array<double, kBernMax + 1>& bern_table() {
    static const auto table = build_bernoulli();
    return table;
}

constexpr int kNu = 22;  // Bernoulli correction terms

// x^{-e} for the two scalar types the formula runs over
Complex pow_neg(double x, Complex e) { return std::exp(-e * std::log(x)); }
Jet2 pow_neg(double x, const Jet2& e) {
    double lg = std::log(x);
    return exp(Jet2(-e.f * lg, -e.d1 * lg, -e.d2 * lg));
}
double abs_value(Complex z) { return std::abs(z); }
double abs_value(const Jet2& j) { return std::abs(j.f); }

// Tail of the Euler-Maclaurin formula past the partial sum: evaluated at
// P = N + a, together with the standard remainder bound
//   |R| <= |B_{2nu+2}/(2nu+2)! * (s)_{2nu+1} * P^{-s-2nu-1}| * |s+2nu+1|/(sigma+2nu+1).
template <typename T>
T em_tail(const T& s, Complex s_plain, double P, double* bound) {
    T tail = pow_neg(P, s - T(Complex(1.0))) / (s - T(Complex(1.0)));
    tail = tail + pow_neg(P, s) * T(Complex(0.5));
    T poch = s;                       // (s)_1
    double fact = 2.0;                // (2k)!
    const auto& B = bern_table();
    for (int k = 1; k <= kNu; ++k) {
        // poch == (s)_{2k-1}, fact == (2k)!
        tail = tail + T(Complex(B[k] / fact)) * poch * pow_neg(P, s + T(Complex(2.0 * k - 1.0)));
        poch = poch * (s + T(Complex(2.0 * k - 1.0))) * (s + T(Complex(2.0 * k)));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    if (bound) {
        double sigma = s_plain.real();
        double pa = 1.0;
        for (int j = 0; j < 2 * kNu + 1; ++j) pa *= std::abs(s_plain + Complex(j));
        double next = std::abs(B[kNu + 1]) / fact * pa * std::pow(P, -(sigma + 2.0 * kNu + 1.0));
        double denom = sigma + 2.0 * kNu + 1.0;
        *bound = (denom > 0.0) ? next * std::abs(s_plain + Complex(2.0 * kNu + 1.0)) / denom
                               : std::numeric_limits<double>::infinity();
    }
    return tail;
}

template <typename T>
T hurwitz_em(const T& s, Complex s_plain, double a) {
    if (std::abs(s_plain - Complex(1.0)) <= 1e-6)
        throw PoleProximity("zeta/hurwitz: |s-1| <= 1e-6");
    if (!(a > 0.0 && a <= 1.0)) throw Error("hurwitz_zeta: a must lie in (0,1]");
    int N = zeta_em_truncation(std::abs(s_plain.imag()));
    for (int attempt = 0;; ++attempt) {
        T sum = T(Complex(0.0));
        for (int n = 0; n < N; ++n) sum = sum + pow_neg(n + a, s);
        double bound = 0.0;
        T tail = em_tail(s, s_plain, N + a, &bound);
        T result = sum + tail;
        double scale = std::max(1.0, abs_value(result));
        if (bound <= 1e-12 * scale) return result;
        if (attempt >= 6 || N > 4000000)
            throw AccuracyLoss("zeta/hurwitz: Euler-Maclaurin bound will not certify");
        N = static_cast<int>(N * 1.7) + 16;
    }
}

}  // namespace

double bernoulli_2k(int k) {
    if (k < 0 || k > kBernMax) throw Error("bernoulli_2k: index out of table");
    return bern_table()[k];
}

int zeta_em_truncation(double t) {
    return std::max(24, static_cast<int>(std::ceil(0.35 * t)) + 8);
}

Complex hurwitz_zeta(Complex s, double a) { return hurwitz_em(s, s, a); }

Complex zeta(Complex s, int deriv_order) {
    if (deriv_order == 0) return hurwitz_em(s, s, 1.0);
    if (deriv_order == 1) return hurwitz_em(Jet2::variable(s), s, 1.0).d1;
    throw Error("zeta: deriv_order must be 0 or 1");
}

ZetaDerivatives zeta_jet(Complex s) {
    Jet2 r = hurwitz_em(Jet2::variable(s), s, 1.0);
    return {r.f, r.d1, r.d2};
}

CriticalLineZeta::CriticalLineZeta(double t_max, std::vector<double> up_shifts,
                                   std::vector<double> down_shifts, bool with_derivative)
    : up_(std::move(up_shifts)), down_(std::move(down_shifts)), deriv_(with_derivative) {
    n_max_ = zeta_em_truncation(std::abs(t_max));
    logn_.resize(n_max_ + 1, 0.0);
    for (int m = 1; m <= n_max_; ++m) logn_[m] = std::log(static_cast<double>(m));
    auto build = [&](const std::vector<double>& shifts) {
        std::vector<std::vector<double>> t;
        for (double sh : shifts) {
            std::vector<double> col(n_max_ + 1, 0.0);
            for (int m = 1; m <= n_max_; ++m)
                col[m] = std::pow(static_cast<double>(m), -0.5 - sh);
            t.push_back(std::move(col));
        }
        return t;
    };
    pw_up_ = build(up_);
    pw_down_ = build(down_);
}

void CriticalLineZeta::eval(double t, Values& out) const {
    const int N = std::min(n_max_, zeta_em_truncation(std::abs(t)));
    const size_t ku = up_.size(), kd = down_.size();
    out.up.assign(ku, Complex(0.0));
    out.down.assign(kd, Complex(0.0));
    if (deriv_) {
        out.up_d1.assign(ku, Complex(0.0));
        out.down_d1.assign(kd, Complex(0.0));
    }
    for (int m = 1; m <= N; ++m) {
        double ph = -t * logn_[m];
        Complex base(std::cos(ph), std::sin(ph));  // m^{-it}
        for (size_t j = 0; j < ku; ++j) out.up[j] += pw_up_[j][m] * base;
        for (size_t j = 0; j < kd; ++j) out.down[j] += pw_down_[j][m] * std::conj(base);
        if (deriv_) {
            for (size_t j = 0; j < ku; ++j) out.up_d1[j] -= logn_[m] * pw_up_[j][m] * base;
            for (size_t j = 0; j < kd; ++j)
                out.down_d1[j] -= logn_[m] * pw_down_[j][m] * std::conj(base);
        }
    }
    const double P = N + 1.0;
    auto finish = [&](Complex s, Complex& value, Complex* d1) {
        double bound = 0.0;
        if (d1) {
            Jet2 tail = em_tail(Jet2::variable(s), s, P, &bound);
            value += tail.f;
            *d1 += tail.d1;
        } else {
            value += em_tail(s, s, P, &bound);
        }
        if (bound > 1e-10 * std::max(1.0, std::abs(value)))
            throw AccuracyLoss("CriticalLineZeta: tail bound not certified");
    };
    for (size_t j = 0; j < ku; ++j)
        finish(Complex(0.5 + up_[j], t), out.up[j], deriv_ ? &out.up_d1[j] : nullptr);
    for (size_t j = 0; j < kd; ++j)
        finish(Complex(0.5 + down_[j], -t), out.down[j], deriv_ ? &out.down_d1[j] : nullptr);
}

}  // namespace ratiolab
