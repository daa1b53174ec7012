#include <cmath>
#include <functional>

#include "ratiolab/errors.hpp"
#include "ratiolab/euler.hpp"
#include "ratiolab/quadrature.hpp"

// Local (per-prime) factors of the arithmetic Euler products. Each factor is
// the zeta-canceling prefactor times a local sum; the sum has two
// independently computable forms (theta quadrature vs truncated lattice sum,
// closed even-part form vs direct even-constrained sum) that the tests and
// acceptance criterion 4 play against each other.

namespace ratiolab {

namespace {

Complex p_pow(int64_t p, Complex e) {
    return std::exp(e * std::log(static_cast<double>(p)));
}

// over compositions (a_1..a_parts) >= 0 with sum == total
void for_each_composition(int parts, int total, std::vector<int>& a,
                          const std::function<void()>& fn) {
    if (parts == 0) {
        if (total == 0) fn();
        return;
    }
    if (parts == 1) {
        a.back() = total;
        fn();
        return;
    }
    int idx = static_cast<int>(a.size()) - parts;
    for (int v = 0; v <= total; ++v) {
        a[idx] = v;
        for_each_composition(parts - 1, total - v, a, fn);
    }
}

Complex zeta_canceller(int64_t p, Complex x, Complex y) { return 1.0 - p_pow(p, -1.0 - x - y); }

}  // namespace

namespace detail {

Complex a_zeta_prefactor(int64_t p, const ShiftSet& s) {
    Complex num(1.0), den(1.0);
    for (const auto& a : s.alpha)
        for (const auto& b : s.beta) num *= zeta_canceller(p, a, b);
    for (const auto& g : s.gamma)
        for (const auto& d : s.delta) num *= zeta_canceller(p, g, d);
    for (const auto& a : s.alpha)
        for (const auto& d : s.delta) den *= zeta_canceller(p, a, d);
    for (const auto& b : s.beta)
        for (const auto& g : s.gamma) den *= zeta_canceller(p, b, g);
    return num / den;
}

Complex a_quadratic_prefactor(int64_t p, const ShiftSet& s) {
    Complex num(1.0), den(1.0);
    int K = s.K(), Q = s.Q();
    for (int j = 0; j < K; ++j)
        for (int k = j; k < K; ++k) num *= zeta_canceller(p, s.alpha[j], s.alpha[k]);
    for (int q = 0; q < Q; ++q)
        for (int r = q + 1; r < Q; ++r) num *= zeta_canceller(p, s.gamma[q], s.gamma[r]);
    for (int k = 0; k < K; ++k)
        for (int q = 0; q < Q; ++q) den *= zeta_canceller(p, s.alpha[k], s.gamma[q]);
    return num / den;
}

Complex a_elliptic_prefactor(int64_t p, const ShiftSet& s) {
    Complex num(1.0), den(1.0);
    int K = s.K(), Q = s.Q();
    for (int j = 0; j < K; ++j)
        for (int k = j + 1; k < K; ++k) num *= zeta_canceller(p, s.alpha[j], s.alpha[k]);
    for (int q = 0; q < Q; ++q)
        for (int r = q + 1; r < Q; ++r) num *= zeta_canceller(p, s.gamma[q], s.gamma[r]);
    for (int q = 0; q < Q; ++q) num *= zeta_canceller(p, s.gamma[q], s.gamma[q]);
    for (int k = 0; k < K; ++k)
        for (int q = 0; q < Q; ++q) den *= zeta_canceller(p, s.alpha[k], s.gamma[q]);
    return num / den;
}

}  // namespace detail

namespace {

Complex a_zeta_theta_sum(int64_t p, const ShiftSet& s, const EulerConfig& cfg) {
    std::vector<Complex> xa, xb, xg, xd;
    for (const auto& v : s.alpha) xa.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.beta) xb.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.gamma) xg.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.delta) xd.push_back(p_pow(p, -0.5 - v));
    auto integrand = [&](double theta) {
        Complex u = std::polar(1.0, kTwoPi * theta);
        Complex ubar = std::conj(u);
        Complex num(1.0), den(1.0);
        for (const auto& x : xg) num *= 1.0 - u * x;
        for (const auto& x : xd) num *= 1.0 - ubar * x;
        for (const auto& x : xa) den *= 1.0 - u * x;
        for (const auto& x : xb) den *= 1.0 - ubar * x;
        return num / den;
    };
    return integrate_periodic_doubling(integrand, cfg.theta_nodes, 1e-14).value;
}

// shell of total weight W (sum a + sum c == sum b + sum d == W)
Complex a_zeta_lattice_shell(int64_t p, const ShiftSet& s, int W) {
    int K = s.K(), L = s.L(), Q = s.Q(), R = s.R();
    std::vector<Complex> xa, xb, xg, xd;
    for (const auto& v : s.alpha) xa.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.beta) xb.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.gamma) xg.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.delta) xd.push_back(p_pow(p, -0.5 - v));
    // numerator side: sum over (a, c) with sum a + sum c == W
    Complex numer(0.0);
    for (int cmask = 0; cmask < (1 << Q); ++cmask) {
        int csum = __builtin_popcount(static_cast<unsigned>(cmask));
        if (csum > W) continue;
        Complex cterm(1.0);
        for (int q = 0; q < Q; ++q)
            if (cmask & (1 << q)) cterm *= -xg[q];
        std::vector<int> a(K, 0);
        for_each_composition(K, W - csum, a, [&]() {
            Complex t = cterm;
            for (int k = 0; k < K; ++k)
                for (int i = 0; i < a[k]; ++i) t *= xa[k];
            numer += t;
        });
    }
    // denominator side: sum over (b, d) with sum b + sum d == W
    Complex denom(0.0);
    for (int dmask = 0; dmask < (1 << R); ++dmask) {
        int dsum = __builtin_popcount(static_cast<unsigned>(dmask));
        if (dsum > W) continue;
        Complex dterm(1.0);
        for (int r = 0; r < R; ++r)
            if (dmask & (1 << r)) dterm *= -xd[r];
        std::vector<int> b(L, 0);
        for_each_composition(L, W - dsum, b, [&]() {
            Complex t = dterm;
            for (int l = 0; l < L; ++l)
                for (int i = 0; i < b[l]; ++i) t *= xb[l];
            denom += t;
        });
    }
    return numer * denom;
}

Complex a_zeta_lattice_sum(int64_t p, const ShiftSet& s, const EulerConfig& cfg) {
    Complex total(0.0);
    double prev_shell = 0.0;
    int order = cfg.lattice_order;
    const int order_cap = 128;
    for (int W = 0; W <= order; ++W) {
        Complex shell = a_zeta_lattice_shell(p, s, W);
        total += shell;
        double mag = std::abs(shell);
        if (W == order) {
            bool converged = mag <= 1e-14 * std::max(1.0, std::abs(total));
            if (!converged) {
                if (cfg.tail_policy == EulerConfig::TailPolicy::Fixed) {
                    double rho = (prev_shell > 0.0) ? std::min(0.9, mag / prev_shell) : 0.5;
                    if (mag * rho / (1.0 - rho) > cfg.tail_tolerance)
                        throw TailNotConverged("a_zeta lattice sum: tail above tolerance");
                } else if (order < order_cap) {
                    order *= 2;
                    continue;
                } else {
                    throw TailNotConverged("a_zeta lattice sum: order cap reached");
                }
            }
        }
        prev_shell = mag;
    }
    return total;
}

}  // namespace

Complex a_zeta_local(int64_t p, const ShiftSet& s, const EulerConfig& cfg, LocalForm form) {
    Complex sum = (form == LocalForm::ThetaIntegral) ? a_zeta_theta_sum(p, s, cfg)
                                                     : a_zeta_lattice_sum(p, s, cfg);
    return detail::a_zeta_prefactor(p, s) * sum;
}

namespace {

// even-part bracket (1+1/p)^{-1} (f(x)/2 + f(-x)/2 + 1/p)
Complex even_bracket(int64_t p, const std::function<Complex(double)>& f) {
    double x = 1.0 / std::sqrt(static_cast<double>(p));
    double invp = 1.0 / static_cast<double>(p);
    return (0.5 * f(x) + 0.5 * f(-x) + invp) / (1.0 + invp);
}

Complex quadratic_f(int64_t p, const ShiftSet& s, double x) {
    Complex num(1.0), den(1.0);
    for (const auto& g : s.gamma) num *= 1.0 - x * p_pow(p, -g);
    for (const auto& a : s.alpha) den *= 1.0 - x * p_pow(p, -a);
    return num / den;
}

Complex elliptic_f(int64_t p, const ShiftSet& s, double x, double lambda_p) {
    Complex num(1.0), den(1.0);
    if (p == 11) {
        const double r11 = 1.0 / std::sqrt(11.0);
        for (const auto& g : s.gamma) num *= 1.0 - x * r11 * p_pow(p, -g);
        for (const auto& a : s.alpha) den *= 1.0 - x * r11 * p_pow(p, -a);
    } else {
        for (const auto& g : s.gamma)
            num *= 1.0 - lambda_p * x * p_pow(p, -g) + x * x * p_pow(p, -2.0 * g);
        for (const auto& a : s.alpha)
            den *= 1.0 - lambda_p * x * p_pow(p, -a) + x * x * p_pow(p, -2.0 * a);
    }
    return num / den;
}

// Direct even-constrained sum: 1 + (1+1/p)^{-1} sum over 0 < sum a + sum c
// even of the weighted monomials. chooser(q, c) supplies the denominator-slot
// weight (mu or mu_E), slot_cap its support bound; num_weight(k, a) the
// numerator-slot weight (1 for quadratic, lambda(p^a) for elliptic).
Complex even_direct_sum(int64_t p, const ShiftSet& s, const EulerConfig& cfg, int slot_cap,
                        const std::function<double(int, int)>& den_weight,
                        const std::function<double(int, int)>& num_weight) {
    int K = s.K(), Q = s.Q();
    std::vector<Complex> xa, xg;
    for (const auto& v : s.alpha) xa.push_back(p_pow(p, -0.5 - v));
    for (const auto& v : s.gamma) xg.push_back(p_pow(p, -0.5 - v));
    Complex inner(0.0);
    double prev_shell = 0.0;
    int order = std::max(2, cfg.lattice_order);
    const int order_cap = 128;
    for (int W = 2; W <= order; W += 2) {
        Complex shell(0.0);
        // c-vector: mixed radix over slot_cap+1 values per denominator slot
        std::vector<int> c(Q, 0);
        bool done = false;
        while (!done) {
            int csum = 0;
            double cweight = 1.0;
            for (int q = 0; q < Q; ++q) {
                csum += c[q];
                cweight *= den_weight(q, c[q]);
            }
            if (csum <= W && cweight != 0.0) {
                Complex cfac(cweight);
                for (int q = 0; q < Q; ++q)
                    for (int i = 0; i < c[q]; ++i) cfac *= xg[q];
                std::vector<int> a(K, 0);
                for_each_composition(K, W - csum, a, [&]() {
                    double w = 1.0;
                    for (int k = 0; k < K; ++k) w *= num_weight(k, a[k]);
                    if (w == 0.0) return;
                    Complex t = cfac * w;
                    for (int k = 0; k < K; ++k)
                        for (int i = 0; i < a[k]; ++i) t *= xa[k];
                    shell += t;
                });
            }
            int q = 0;
            while (q < Q && ++c[q] > slot_cap) c[q++] = 0;
            done = (q >= Q);
        }
        inner += shell;
        double mag = std::abs(shell);
        if (W + 2 > order) {
            bool converged = mag <= 1e-14 * std::max(1.0, std::abs(inner) + 1.0);
            if (!converged) {
                if (cfg.tail_policy == EulerConfig::TailPolicy::Fixed) {
                    double rho = (prev_shell > 0.0) ? std::min(0.9, mag / prev_shell) : 0.5;
                    if (mag * rho / (1.0 - rho) > cfg.tail_tolerance)
                        throw TailNotConverged("even direct sum: tail above tolerance");
                } else if (order < order_cap) {
                    order *= 2;
                } else {
                    throw TailNotConverged("even direct sum: order cap reached");
                }
            }
        }
        prev_shell = mag;
    }
    double invp = 1.0 / static_cast<double>(p);
    return 1.0 + inner / (1.0 + invp);
}

}  // namespace

Complex a_quadratic_local(int64_t p, const ShiftSet& s, const EulerConfig& cfg, EvenSumForm form) {
    s.require_two_blocks();
    Complex bracket;
    if (form == EvenSumForm::ClosedForm) {
        bracket = even_bracket(p, [&](double x) { return quadratic_f(p, s, x); });
    } else {
        bracket = even_direct_sum(
            p, s, cfg, 1, [](int, int c) { return c == 0 ? 1.0 : -1.0; },  // mu(p^c), c <= 1
            [](int, int) { return 1.0; });
    }
    return detail::a_quadratic_prefactor(p, s) * bracket;
}

Complex a_elliptic_local(int64_t p, const ShiftSet& s, const EulerConfig& cfg, EvenSumForm form,
                         const CoefficientTable& coeffs) {
    s.require_two_blocks();
    if (p > coeffs.max_index()) throw MissingCoefficients("a_elliptic_local: p beyond table");
    double lp = coeffs.lambda(p);
    Complex bracket;
    if (form == EvenSumForm::ClosedForm) {
        bracket = even_bracket(p, [&](double x) { return elliptic_f(p, s, x, lp); });
    } else {
        double chi0 = (p == 11) ? 0.0 : 1.0;
        bracket = even_direct_sum(
            p, s, cfg, 2,
            [&](int, int c) { return c == 0 ? 1.0 : (c == 1 ? -lp : chi0); },  // mu_E(p^c)
            [&](int, int a) { return coeffs.lambda_prime_power(p, a); });
    }
    return detail::a_elliptic_prefactor(p, s) * bracket;
}

}  // namespace ratiolab
