#include <cmath>

#include "doctest.h"
#include "ratiolab/characters.hpp"
#include "ratiolab/chi.hpp"
#include "ratiolab/gamma.hpp"
#include "ratiolab/conjectures.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/zeta.hpp"

using namespace ratiolab;
using namespace ratiolab::conj;

namespace {

EulerConfig fast_cfg() {
    EulerConfig cfg;
    cfg.prime_cutoff = 2000;
    cfg.tail_tolerance = 1e-3;
    return cfg;
}

int binomial(int n, int k) {
    int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("xi enumeration count is (K+L choose K)") {
    for (int K = 0; K <= 3; ++K)
        for (int L = 0; L <= 3; ++L) {
            auto xs = xi_permutations(K, L);
            CHECK(static_cast<int>(xs.size()) == binomial(K + L, K));
            for (const auto& [head, tail] : xs) {
                CHECK(head.size() == static_cast<size_t>(K));
                CHECK(tail.size() == static_cast<size_t>(L));
                for (size_t i = 1; i < head.size(); ++i) CHECK(head[i] > head[i - 1]);
                for (size_t i = 1; i < tail.size(); ++i) CHECK(tail[i] > tail[i - 1]);
            }
        }
}

TEST_CASE("conj_zeta_rhs reduces to (T-1) Y_U A for K=1, L=Q=R=0... pure identity") {
    // with L=0 the Xi-sum is the single identity permutation and no chi
    // factors survive: the integrand is the constant Y_U A
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.delta = {Complex(0.2)};
    EulerConfig cfg = fast_cfg();
    ConjectureValue v = conj_zeta_rhs(s, 101.0, cfg);
    Complex unit = y_factor(Symmetry::U, s) * a_zeta(s, cfg).value;
    CHECK(std::abs(v.value - 100.0 * unit) < 1e-6 * std::abs(v.value));
}

TEST_CASE("conj_zeta_rhs matches the hand-built two-term Farmer form") {
    // K=L=Q=R=1: integrand = Y_U A(a,b;g,d) + chi(s+a)/chi(s-b) Y_U A(-b,-a;g,d)
    ShiftSet s;
    s.alpha = {Complex(0.10)};
    s.beta = {Complex(0.12)};
    s.gamma = {Complex(0.15)};
    s.delta = {Complex(0.20)};
    EulerConfig cfg = fast_cfg();
    double T = 400.0;
    ConjectureValue rhs = conj_zeta_rhs(s, T, cfg);

    ShiftSet ident = s;
    ShiftSet swap;
    swap.alpha = {-s.beta[0]};
    swap.beta = {-s.alpha[0]};
    swap.gamma = s.gamma;
    swap.delta = s.delta;
    Complex c_id = y_factor(Symmetry::U, ident) * a_zeta(ident, cfg).value;
    Complex c_sw = y_factor(Symmetry::U, swap) * a_zeta(swap, cfg).value;
    auto integrand = [&](double t) {
        Complex sc(0.5, t);
        Complex chi_ratio =
            std::exp(log_chi(sc + s.alpha[0]) - log_chi(sc - s.beta[0]));
        return c_id + chi_ratio * c_sw;
    };
    Complex byhand = integrate_adaptive(integrand, 1.0, T, 1e-9).value;
    CHECK(std::abs(rhs.value - byhand) < 1e-7 * std::abs(byhand));
}

TEST_CASE("chi modes differ by less than 1% at T = 1e3 and small shifts") {
    ShiftSet s;
    s.alpha = {Complex(0.05)};
    s.beta = {Complex(0.06)};
    s.gamma = {Complex(0.08)};
    s.delta = {Complex(0.07)};
    EulerConfig cfg = fast_cfg();
    ConjectureValue exact = conj_zeta_rhs(s, 1000.0, cfg, ChiMode::ExactGamma);
    ConjectureValue power = conj_zeta_rhs(s, 1000.0, cfg, ChiMode::TOver2PiPower);
    CHECK(std::abs(exact.value - power.value) < 0.01 * std::abs(exact.value));
}

TEST_CASE("perturbed-shift Richardson limit of the moment integrand is finite") {
    // alpha = beta -> 0 limit of the K=L=1, Q=R=0 integrand density:
    // zeta(1+a+b)A + (t/2pi)^{-a-b} zeta(1-a-b)A'; at t fixed the limit is
    // log(t/2pi) + 2 gamma_E + O(prime corrections)
    EulerConfig cfg = fast_cfg();
    double t = 50.0;
    auto density = [&](double h) {
        ShiftSet s;
        s.alpha = {Complex(h)};
        s.beta = {Complex(1.5 * h)};
        ShiftSet sw;
        sw.alpha = {Complex(-1.5 * h)};
        sw.beta = {Complex(-h)};
        Complex c1 = y_factor(Symmetry::U, s) * a_zeta(s, cfg).value;
        Complex c2 = y_factor(Symmetry::U, sw) * a_zeta(sw, cfg).value;
        return c1 + std::exp(-(s.alpha[0] + s.beta[0]) * std::log(t / kTwoPi)) * c2;
    };
    Complex limit = richardson_limit(density, 1e-3);
    CHECK(std::isfinite(std::abs(limit)));
    CHECK(std::abs(limit - Complex(std::log(t / kTwoPi) + 2.0 * kEulerGamma)) < 0.05);
}

TEST_CASE("farmer_leading trivial cases") {
    Complex a(0.1), b(0.12), g(0.15), d(0.2);
    CHECK(std::abs(farmer_leading(a, b, a, b, 100.0) - 1.0) < 1e-15);
    // T -> infinity surrogate
    Complex v = farmer_leading(a, b, g, d, 1e12);
    Complex lim = 1.0 + (a - g) * (b - d) / ((a + b) * (g + d));
    CHECK(std::abs(v - lim) < 1e-3 * std::abs(lim));
    CHECK_THROWS_AS(farmer_leading(a, -a, g, d, 100.0), DegenerateShifts);
}

TEST_CASE("farmer_leading tracks conj_zeta_rhs at 1/log T shifts") {
    double T = 10000.0;
    double u = 1.0 / std::log(T);
    Complex a(1.0 * u), b(1.1 * u), g(1.4 * u), d(1.7 * u);
    ShiftSet s;
    s.alpha = {a};
    s.beta = {b};
    s.gamma = {g};
    s.delta = {d};
    EulerConfig cfg = fast_cfg();
    ConjectureValue rhs = conj_zeta_rhs(s, T, cfg);
    Complex lead = farmer_leading(a, b, g, d, T);
    CHECK(std::abs(rhs.value / (T - 1.0) - lead) < 0.05 * std::abs(lead));
}

TEST_CASE("conj_quadratic_rhs: K=0 collapses to X* times the gamma-block constant") {
    ShiftSet s;
    s.gamma = {Complex(0.05)};
    EulerConfig cfg = fast_cfg();
    ConjectureValue v = conj_quadratic_rhs(s, 500.0, DiscriminantSign::Positive, cfg);
    auto family = fundamental_discriminants(500, true);
    Complex unit = y_factor(Symmetry::S, s) * a_quadratic(s, cfg).value;
    CHECK(std::abs(v.value - static_cast<double>(family.count) * unit) <
          1e-9 * std::abs(v.value));
}

TEST_CASE("conj_quadratic_rhs alpha=gamma cancellation pattern") {
    // identity-epsilon term has Y_S A_D = zeta(1+2a)A/zeta(1+a+g)...; with
    // g = a the epsilon=+1 coefficient is exactly 1 per discriminant
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.gamma = {Complex(0.1)};
    EulerConfig cfg = fast_cfg();
    Complex coeff = y_factor(Symmetry::S, s) * a_quadratic(s, cfg).value;
    CHECK(std::abs(coeff - 1.0) < 1e-10);
}

TEST_CASE("conj_elliptic_rhs: odd parity vanishes as alpha -> 0") {
    CoefficientTable coeffs = e11_coefficients_eta(2500);
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.alpha = {Complex(1e-4)};
    ConjectureValue v = conj_elliptic_rhs(s, 200.0, Parity::Odd, cfg, coeffs);
    ShiftSet ref;
    ref.alpha = {Complex(0.1)};
    ConjectureValue scale = conj_elliptic_rhs(ref, 200.0, Parity::Odd, cfg, coeffs);
    CHECK(std::abs(v.value) <= 1e-2 * std::abs(scale.value));
}

TEST_CASE("conj_elliptic_rhs: K=0 collapses to the family count times a constant") {
    CoefficientTable coeffs = e11_coefficients_eta(2500);
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.gamma = {Complex(0.08)};
    ConjectureValue v = conj_elliptic_rhs(s, 300.0, Parity::Even, cfg, coeffs);
    int64_t count = 0;
    for (bool positive : {true, false})
        for (int64_t d : fundamental_discriminants(300, positive).values)
            if (d % 11 != 0 && twist_sign(d) == 1) ++count;
    Complex unit = y_factor(Symmetry::O, s) * a_elliptic(s, cfg, coeffs).value;
    CHECK(std::abs(v.value - static_cast<double>(count) * unit) < 1e-9 * std::abs(v.value));
}

TEST_CASE("conj_elliptic_rhs even parity two-term structure by hand") {
    CoefficientTable coeffs = e11_coefficients_eta(2500);
    EulerConfig cfg = fast_cfg();
    cfg.tail_tolerance = 5e-2;
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.gamma = {Complex(0.12)};
    double X = 150.0;
    ConjectureValue v = conj_elliptic_rhs(s, X, Parity::Even, cfg, coeffs);
    // hand expansion: sum_d [ YA(a;g) + (11 d^2/4pi^2)^{-a} g2(1/2+a) YA(-a;g) ]
    ShiftSet plus = s, minus = s;
    minus.alpha[0] = -minus.alpha[0];
    Complex c_plus = y_factor(Symmetry::O, plus) * a_elliptic(plus, cfg, coeffs).value;
    Complex c_minus = y_factor(Symmetry::O, minus) * a_elliptic(minus, cfg, coeffs).value *
                      gamma_ratio_weight2(Complex(0.6));
    Complex byhand(0.0);
    for (bool positive : {true, false})
        for (int64_t d : fundamental_discriminants(static_cast<int64_t>(X), positive).values) {
            if (d % 11 == 0 || twist_sign(d) != 1) continue;
            double dd = static_cast<double>(d);
            byhand += c_plus + std::pow(11.0 * dd * dd / (4.0 * kPi * kPi), -0.1) * c_minus;
        }
    CHECK(std::abs(v.value - byhand) < 1e-10 * std::abs(byhand));
}

TEST_CASE("log_deriv_cr is real for real r and carries the GGM 1/4r^2 growth") {
    EulerConfig cfg = fast_cfg();
    ConjectureValue cr = log_deriv_cr(Complex(0.1), cfg);
    CHECK(std::abs(cr.value.imag()) < 1e-10);
    // the GGM prime sum sum_p log^2 p/(p^{1+2r}-1) ~ 1/(4r^2) as r -> 0; its
    // mass sits near p ~ e^{1/2r}, far beyond any prime table, so the growth
    // is checked on the analytically equivalent (zeta'/zeta)'(1+2r)
    // (they differ by a bounded prime-power correction)
    double r = 0.01;
    auto jet = zeta_jet(Complex(1.0 + 2.0 * r));
    double growth = ((jet.d2 * jet.value - jet.d1 * jet.d1) / (jet.value * jet.value)).real();
    CHECK(std::abs(growth - 1.0 / (4.0 * r * r)) < 0.1 / (4.0 * r * r));
}

TEST_CASE("log_deriv derivative identities against finite differences") {
    // d/da d/db [f(a+b)f(c+d)/(f(a+d)f(b+c))] at a=b=c=d=r equals (log f)''(2r)
    double r = 0.12, h = 1e-4;
    auto f = [&](double x) { return zeta(Complex(1.0 + x)); };
    auto ratio = [&](double a, double b) {
        return f(a + b) * f(r + r) / (f(a + r) * f(b + r));
    };
    Complex mixed = (ratio(r + h, r + h) - ratio(r + h, r - h) - ratio(r - h, r + h) +
                     ratio(r - h, r - h)) /
                    (4.0 * h * h);
    auto jet = zeta_jet(Complex(1.0 + 2.0 * r));
    Complex logf2 = (jet.d2 * jet.value - jet.d1 * jet.d1) / (jet.value * jet.value);
    CHECK(std::abs(mixed - logf2) < 1e-4 * std::abs(logf2));
}

TEST_CASE("log_deriv_rhs domain guards") {
    EulerConfig cfg = fast_cfg();
    CHECK_THROWS_AS(log_deriv_rhs(Complex(0.01), 1000.0, cfg), RTooSmall);
    CHECK_THROWS(log_deriv_rhs(Complex(0.26), 1000.0, cfg));
}

TEST_CASE("discrete_moment_rhs at a=c is the zero-counting main term") {
    EulerConfig cfg = fast_cfg();
    Complex a(0.1);
    ConjectureValue v = discrete_moment_rhs(a, a, 1000.0, cfg);
    double t2pi = 1000.0 / kTwoPi;
    CHECK(std::abs(v.value - Complex(t2pi * (std::log(t2pi) - 1.0))) < 1e-9);
}

TEST_CASE("discrete_moment prime sum vanishes at a=c and matches a finite difference") {
    // the prime sum is d/dbeta at beta=0 of the A_zeta product at
    // (a-al, al+beta; c-al, al); check against a central difference of the
    // theta-integral A_zeta at al=0
    EulerConfig cfg = fast_cfg();
    Complex a(0.05), c(0.1);
    double h = 1e-4;
    auto a_at = [&](double beta) {
        ShiftSet s;
        s.alpha = {a};
        s.beta = {Complex(beta)};
        s.gamma = {c};
        s.delta = {Complex(0.0)};
        return a_zeta(s, cfg).value;
    };
    Complex fd = (a_at(h) - a_at(-h)) / (2.0 * h);
    double direct = 0.0;
    for (int64_t p : primes_up_to(cfg.prime_cutoff)) {
        double lg = std::log(static_cast<double>(p));
        double pa = std::pow(static_cast<double>(p), 1.0 + a.real());
        double pc = std::pow(static_cast<double>(p), 1.0 + c.real());
        direct += lg / pc * (1.0 / pa - 1.0 / pc) / ((1.0 - 1.0 / pa) * (1.0 - 1.0 / pc));
    }
    CHECK(std::abs(fd - Complex(direct)) < 1e-5);
}

TEST_CASE("ks_shifted_ratio_rhs K=1 closed form and conj_zeta consistency") {
    EulerConfig cfg = fast_cfg();
    Complex a(0.1), d(0.2);
    ConjectureValue v = ks_shifted_ratio_rhs({a}, {d}, 1000.0, cfg);
    Complex expect = ks_b({a}, {d}, cfg).value / zeta(1.0 + a + d);
    CHECK(std::abs(v.value - expect) < 1e-12 * std::abs(expect));
    // two assembly paths of the same recipe output
    ShiftSet s;
    s.alpha = {a};
    s.delta = {d};
    ConjectureValue via_zeta = conj_zeta_rhs(s, 501.0, cfg);
    CHECK(std::abs(via_zeta.value / 500.0 - v.value) < 1e-6 * std::abs(v.value));
}

TEST_CASE("ks magnitude scaling at 1/log T shifts") {
    EulerConfig cfg = fast_cfg();
    double T = 1e6;
    double u = 1.0 / std::log(T);
    // K=1: |RHS| ~ (alpha+delta)^{1} ~ (log T)^{-1} within a factor
    ConjectureValue v = ks_shifted_ratio_rhs({Complex(u)}, {Complex(u)}, T, cfg);
    CHECK(std::abs(v.value) < 2.0 * (2.0 * u));
    CHECK(std::abs(v.value) > 0.5 * u);
    // zeta-side check: 1/zeta(1+a+d) ~ (a+d); the Euler-gamma correction is
    // ~ gamma_E (a+d) ~ 8% at this T
    Complex zfac = 1.0 / zeta(Complex(1.0 + 2.0 * u));
    CHECK(std::abs(zfac - Complex(2.0 * u)) < 0.1 * 2.0 * u);
}

TEST_CASE("within-block permutation symmetry of the assembled RHS") {
    EulerConfig cfg = fast_cfg();
    cfg.tail_tolerance = 5e-3;  // K=2 substituted shifts carry a slower tail
    ShiftSet s;
    s.alpha = {Complex(0.1), Complex(0.2)};
    s.gamma = {Complex(0.15), Complex(0.25)};
    ShiftSet t = s;
    std::swap(t.alpha[0], t.alpha[1]);
    std::swap(t.gamma[0], t.gamma[1]);
    ConjectureValue v1 = conj_quadratic_rhs(s, 300.0, DiscriminantSign::Positive, cfg);
    ConjectureValue v2 = conj_quadratic_rhs(t, 300.0, DiscriminantSign::Positive, cfg);
    CHECK(std::abs(v1.value - v2.value) < 1e-10 * std::abs(v1.value));
}

TEST_CASE("negative-sign family uses the odd gamma factor") {
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.gamma = {Complex(0.15)};
    ConjectureValue pos = conj_quadratic_rhs(s, 300.0, DiscriminantSign::Positive, cfg);
    ConjectureValue neg = conj_quadratic_rhs(s, 300.0, DiscriminantSign::Negative, cfg);
    // same structure, different g and family: values differ but stay O(count)
    CHECK(std::abs(pos.value) > 0.0);
    CHECK(std::abs(neg.value) > 0.0);
    CHECK(std::abs(pos.value - neg.value) > 1e-6);
}

TEST_CASE("coincident substituted shifts are refused") {
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.alpha = {Complex(0.1), Complex(0.1)};  // eps = (+,-) makes a_1 + a_2 = 0
    ConjectureValue ok{};
    CHECK_THROWS_AS(ok = conj_quadratic_rhs(s, 100.0, DiscriminantSign::Positive, cfg),
                    CoincidentShifts);
}

TEST_CASE("matched denominator blocks collapse the zeta RHS to the pure moment") {
    // gamma = alpha, delta = beta: the ratio integrand is 1 and the RHS must
    // be exactly T-1 (the swap term carries zeta(1)^{-1} = 0)
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.beta = {Complex(0.12)};
    s.gamma = {Complex(0.1)};
    s.delta = {Complex(0.12)};
    ConjectureValue v = conj_zeta_rhs(s, 301.0, cfg);
    CHECK(std::abs(v.value - Complex(300.0)) < 1e-7 * 300.0);
}

TEST_CASE("Q=R=0 zeta RHS equals the hand-built shifted second-moment main term") {
    // independent assembly: A is identically 1 in the pure-moment case, so
    // the density is zeta(1+a+b) + (t/2pi)^{-a-b} zeta(1-a-b)
    EulerConfig cfg = fast_cfg();
    ShiftSet s;
    s.alpha = {Complex(0.08)};
    s.beta = {Complex(0.13)};
    double T = 250.0;
    // the classical main term carries the (t/2pi)^{-a-b} power, so compare
    // in the matching chi mode (the exact-Gamma mode differs by O(1/t))
    ConjectureValue v = conj_zeta_rhs(s, T, cfg, ChiMode::TOver2PiPower);
    Complex x = s.alpha[0] + s.beta[0];
    auto density = [&](double t) {
        return zeta(1.0 + x) + std::exp(-x * std::log(t / kTwoPi)) * zeta(1.0 - x);
    };
    Complex byhand = integrate_adaptive(density, 1.0, T, 1e-10).value;
    CHECK(std::abs(v.value - byhand) < 1e-6 * std::abs(byhand));
}

TEST_CASE("discrete moment RHS tracks the leading-order closed form at 1/log T shifts") {
    // the crude form (T/2pi)(log T + (1-T^{-a})(1/c - 1/a)) is only
    // log-order accurate (log T vs log(T/2pi e) is a 30% effect at T=1e4);
    // the refined leading form uses the zero-count density and the exact
    // (t/2pi)^{-a} integral, and lands within gamma_E-size corrections
    double T = 10000.0;
    double u = 1.0 / std::log(T);
    Complex a(u), c(2.0 * u);
    EulerConfig cfg = fast_cfg();
    ConjectureValue rhs = discrete_moment_rhs(a, c, T, cfg);
    double t2pi = T / kTwoPi;
    Complex damp = 1.0 - std::exp((1.0 - a) * std::log(t2pi)) / ((1.0 - a) * t2pi);
    Complex lead = t2pi * ((std::log(t2pi) - 1.0) + damp * (1.0 / c - 1.0 / a));
    CHECK(std::abs(rhs.value - lead) < 0.05 * std::abs(lead));
    // and the crude form agrees at log-order (30% band)
    Complex crude = t2pi * (std::log(T) + (1.0 - std::exp(-a * std::log(T))) *
                                              (1.0 / c - 1.0 / a));
    CHECK(std::abs(rhs.value - crude) < 0.4 * std::abs(crude));
}

TEST_CASE("error budget bounds the move under doubling all truncation knobs") {
    ShiftSet s;
    s.alpha = {Complex(0.10)};
    s.beta = {Complex(0.12)};
    s.gamma = {Complex(0.15)};
    s.delta = {Complex(0.20)};
    EulerConfig cfg;
    cfg.prime_cutoff = 2000;
    cfg.tail_tolerance = 1e-3;
    double T = 200.0;
    ConjectureValue v1 = conj_zeta_rhs(s, T, cfg);
    EulerConfig cfg2 = cfg;
    cfg2.prime_cutoff *= 2;
    cfg2.theta_nodes *= 2;
    cfg2.lattice_order *= 2;
    ConjectureValue v2 = conj_zeta_rhs(s, T, cfg2);
    CHECK(std::abs(v2.value - v1.value) <= 2.0 * v1.error_budget);

    ShiftSet q;
    q.alpha = {Complex(0.1)};
    q.gamma = {Complex(0.15)};
    ConjectureValue w1 = conj_quadratic_rhs(q, 500.0, DiscriminantSign::Positive, cfg);
    ConjectureValue w2 = conj_quadratic_rhs(q, 500.0, DiscriminantSign::Positive, cfg2);
    CHECK(std::abs(w2.value - w1.value) <= 2.0 * w1.error_budget);
}
