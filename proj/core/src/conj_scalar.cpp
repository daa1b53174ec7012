#include <cmath>

#include "ratiolab/conjectures.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab::conj {

namespace {

Complex p_pow(int64_t p, Complex e) {
    return std::exp(e * std::log(static_cast<double>(p)));
}

// certified prime sum: value at P with the P/2 -> P movement as budget
template <typename Fn>
std::pair<Complex, double> certified_prime_sum(const EulerConfig& cfg, Fn&& local) {
    const auto& primes = primes_up_to(cfg.prime_cutoff);
    Complex sum(0.0), at_half(0.0);
    bool recorded = false;
    for (int64_t p : primes) {
        if (p > cfg.prime_cutoff) break;
        if (!recorded && 2 * p > cfg.prime_cutoff) {
            at_half = sum;
            recorded = true;
        }
        sum += local(p);
    }
    double delta = std::abs(sum - at_half);
    if (cfg.tail_policy == EulerConfig::TailPolicy::DoublingCheck &&
        delta > cfg.tail_tolerance * std::max(1.0, std::abs(sum)))
        throw TailNotConverged("prime sum: P/2 -> P movement above tolerance");
    return {sum, delta};
}

}  // namespace

ConjectureValue log_deriv_cr(Complex r, const EulerConfig& cfg) {
    cfg.validate();
    auto local = [&](int64_t p) {
        double lg = std::log(static_cast<double>(p));
        Complex pw = p_pow(p, 1.0 + 2.0 * r);  // p^{1+2r}
        Complex first = -pw * lg * lg / ((pw - 1.0) * (pw - 1.0));
        // theta integral of the conjugate-pair product
        // 1/((e(th) p^{1/2+r} - 1)(e(-th) p^{1/2+r} - 1))
        Complex ps = p_pow(p, 0.5 + r);
        auto integrand = [&](double th) {
            Complex u = std::polar(1.0, kTwoPi * th);
            return 1.0 / ((u * ps - 1.0) * (std::conj(u) * ps - 1.0));
        };
        Complex theta_part =
            integrate_periodic_doubling(integrand, cfg.theta_nodes, 1e-13).value;
        return first + lg * lg * theta_part;
    };
    auto [sum, delta] = certified_prime_sum(cfg, local);
    return {sum, delta};
}

ConjectureValue log_deriv_rhs(Complex r, double T, const EulerConfig& cfg) {
    if (T < 10.0) throw Error("log_deriv_rhs: T >= 10 required");
    if (r.real() < 0.25 / std::log(T)) throw RTooSmall("log_deriv_rhs: Re r >= 1/(4 log T)");
    if (r.real() >= 0.25 - 1e-3) throw Error("log_deriv_rhs: Re r < 1/4 - 1e-3 required");
    ZetaDerivatives z = zeta_jet(1.0 + 2.0 * r);
    Complex logderiv_prime = (z.d2 * z.value - z.d1 * z.d1) / (z.value * z.value);
    ConjectureValue cr = log_deriv_cr(r, cfg);
    ShiftSet s;
    s.alpha = {-r};
    s.beta = {-r};
    s.gamma = {r};
    s.delta = {r};
    EulerValue av = a_zeta(s, cfg);
    // integral over [0,T] of (t/2pi)^{-2r} dt
    Complex tpow_integral =
        kTwoPi * std::exp((1.0 - 2.0 * r) * std::log(T / kTwoPi)) / (1.0 - 2.0 * r);
    Complex swap_coeff = av.value * zeta(1.0 - 2.0 * r) * zeta(1.0 + 2.0 * r);
    Complex value = T * (logderiv_prime + cr.value) + tpow_integral * swap_coeff;
    double budget = T * cr.error_budget + std::abs(tpow_integral) *
                                              std::abs(zeta(1.0 - 2.0 * r) * zeta(1.0 + 2.0 * r)) *
                                              av.tail_estimate;
    return {value, budget};
}

ConjectureValue discrete_moment_rhs(Complex a, Complex c, double T, const EulerConfig& cfg) {
    if (T < 20.0) throw Error("discrete_moment_rhs: T >= 20 required");
    if (a.real() < 0.0 || c.real() < 0.0)
        throw Error("discrete_moment_rhs: Re a, Re c >= 0 required");
    double floor = 0.25 / std::log(T);
    if (std::abs(a) < floor || std::abs(c) < floor)
        throw Error("discrete_moment_rhs: |a|, |c| >> 1/log T required (floor 1/(4 log T))");
    cfg.validate();

    const double t2pi = T / kTwoPi;
    Complex value = t2pi * (std::log(t2pi) - 1.0);  // (1/2pi) int_0^T log(t/2pi) dt
    double budget = 0.0;

    Complex zp_terms = zeta(1.0 + a, 1) / zeta(1.0 + a) - zeta(1.0 + c, 1) / zeta(1.0 + c);
    // prime sum from d/dbeta of the first swap term; vanishes at a = c
    auto local = [&](int64_t p) {
        double lg = std::log(static_cast<double>(p));
        Complex pa = p_pow(p, 1.0 + a), pc = p_pow(p, 1.0 + c);
        return lg / pc * (1.0 / pa - 1.0 / pc) / ((1.0 - 1.0 / pa) * (1.0 - 1.0 / pc));
    };
    auto [psum, pdelta] = certified_prime_sum(cfg, local);
    value += t2pi * (zp_terms + psum);
    budget += t2pi * pdelta;

    if (std::abs(a - c) > 1e-6) {
        // -(t/2pi)^{-a} zeta(1-a) zeta(1+c) / zeta(1+c-a) * prod_p(...), the
        // product being A_zeta at (0, -a; c, 0)
        ShiftSet s;
        s.alpha = {Complex(0.0)};
        s.beta = {-a};
        s.gamma = {c};
        s.delta = {Complex(0.0)};
        EulerValue av = a_zeta(s, cfg);
        Complex coeff = zeta(1.0 - a) * zeta(1.0 + c) / zeta(1.0 + c - a) * av.value;
        // (1/2pi) int_0^T (t/2pi)^{-a} dt = (T/2pi)^{1-a} / (1-a)
        Complex tpow = std::exp((1.0 - a) * std::log(t2pi)) / (1.0 - a);
        value -= tpow * coeff;
        budget += std::abs(tpow) * std::abs(coeff) * av.tail_estimate /
                  std::max(1e-12, std::abs(av.value));
    }
    return {value, budget};
}

ConjectureValue ks_shifted_ratio_rhs(const std::vector<Complex>& alphas,
                                     const std::vector<Complex>& deltas, double,
                                     const EulerConfig& cfg) {
    for (const auto& x : alphas)
        if (!(x.real() > 0.0)) throw Error("ks_shifted_ratio_rhs: Re(alpha) > 0");
    for (const auto& x : deltas)
        if (!(x.real() > 0.0)) throw Error("ks_shifted_ratio_rhs: Re(delta) > 0");
    EulerValue b = ks_b(alphas, deltas, cfg);
    Complex zprod(1.0);
    for (const auto& ai : alphas)
        for (const auto& dj : deltas) zprod *= zeta(1.0 + ai + dj);
    return {b.value / zprod, b.tail_estimate / std::abs(zprod)};
}

}  // namespace ratiolab::conj
