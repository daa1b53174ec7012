#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "ratiolab/characters.hpp"
#include "ratiolab/e11.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/harness.hpp"
#include "ratiolab/lfunctions.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/zeta.hpp"
#include "ratiolab/zeta_zeros.hpp"

namespace ratiolab::harness {

std::vector<Complex> parallel_chunked(int chunks,
                                      const std::function<Complex(int)>& chunk_fn) {
    std::vector<Complex> results(chunks);
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(chunks)));
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mtx;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (int c = cursor.fetch_add(1); c < chunks; c = cursor.fetch_add(1)) {
                try {
                    results[c] = chunk_fn(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mtx);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

namespace {

bool all_real(const std::vector<Complex>& v) {
    for (const auto& x : v)
        if (x.imag() != 0.0) return false;
    return true;
}

// composite 12-point Gauss panels over [a,b] with one halving check;
// deterministic chunked parallelism
struct PanelIntegator {
    std::function<Complex(double)> f;
    double rel_tol = 1e-7;

    Complex pass(double a, double b, double width) const {
        int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
        const GaussRule& rule = gauss_legendre(12);
        double h = (b - a) / panels;
        Complex acc(0.0);
        for (int p = 0; p < panels; ++p) {
            double mid = a + (p + 0.5) * h;
            Complex panel(0.0);
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
            acc += panel * (0.5 * h);
        }
        return acc;
    }

    // step-halving certification within each chunk
    Complex integrate(double a, double b, double width0, double* err) const {
        double width = width0;
        Complex prev = pass(a, b, width);
        for (int halvings = 0; halvings < 6; ++halvings) {
            width *= 0.5;
            Complex cur = pass(a, b, width);
            double diff = std::abs(cur - prev);
            if (diff <= rel_tol * std::max(1.0, std::abs(cur))) {
                if (err) *err = diff;
                return cur;
            }
            prev = cur;
        }
        throw QuadratureNotConverged("lhs sweep: step halving did not converge");
    }
};

}  // namespace

SweepResult lhs_zeta_ratio_integral(const ShiftSet& shifts, double T, double step) {
    if (T < 2.0 || T > 1e4) throw Error("lhs_zeta_ratio_integral: 2 <= T <= 1e4");
    if (step > 0.1) throw Error("lhs_zeta_ratio_integral: step <= 0.1");
    double floor = 0.5 / std::log(T);
    for (const auto& g : shifts.gamma)
        if (g.real() < floor) throw Error("lhs_zeta_ratio_integral: Re gamma >= 1/(2 log T)");
    for (const auto& d : shifts.delta)
        if (d.real() < floor) throw Error("lhs_zeta_ratio_integral: Re delta >= 1/(2 log T)");
    bool fast = all_real(shifts.alpha) && all_real(shifts.beta) && all_real(shifts.gamma) &&
                all_real(shifts.delta);

    std::vector<double> up, down;  // shifts at 1/2+it and 1/2-it
    for (const auto& a : shifts.alpha) up.push_back(a.real());
    for (const auto& g : shifts.gamma) up.push_back(g.real());
    for (const auto& b : shifts.beta) down.push_back(b.real());
    for (const auto& d : shifts.delta) down.push_back(d.real());

    SweepResult out;
    std::mutex flag_mtx;
    const int K = shifts.K(), Q = shifts.Q(), L = shifts.L();

    auto ratio_of = [&](const CriticalLineZeta::Values& v, double t) {
        Complex num(1.0), den(1.0);
        for (int k = 0; k < K; ++k) num *= v.up[k];
        for (int q = 0; q < Q; ++q) {
            if (std::abs(v.up[K + q]) < 1e-8) {
                std::lock_guard<std::mutex> lock(flag_mtx);
                out.flagged_nodes.push_back(t);
            }
            den *= v.up[K + q];
        }
        for (int l = 0; l < L; ++l) num *= v.down[l];
        for (int r = 0; r < shifts.R(); ++r) {
            if (std::abs(v.down[L + r]) < 1e-8) {
                std::lock_guard<std::mutex> lock(flag_mtx);
                out.flagged_nodes.push_back(t);
            }
            den *= v.down[L + r];
        }
        return num / den;
    };

    const int chunks = 64;
    std::vector<double> edges(chunks + 1);
    for (int c = 0; c <= chunks; ++c) edges[c] = 1.0 + (T - 1.0) * c / chunks;
    std::vector<double> errors(chunks, 0.0);
    auto chunk_fn = [&](int c) -> Complex {
        std::unique_ptr<CriticalLineZeta> batch;
        CriticalLineZeta::Values values;
        if (fast) batch = std::make_unique<CriticalLineZeta>(T + 1.0, up, down);
        PanelIntegator integ;
        integ.f = [&](double t) -> Complex {
            if (fast) {
                batch->eval(t, values);
                return ratio_of(values, t);
            }
            Complex s(0.5, t), num(1.0), den(1.0);
            for (const auto& a : shifts.alpha) num *= zeta(s + a);
            for (const auto& b : shifts.beta) num *= zeta(1.0 - s + b);
            for (const auto& g : shifts.gamma) den *= zeta(s + g);
            for (const auto& d : shifts.delta) den *= zeta(1.0 - s + d);
            return num / den;
        };
        return integ.integrate(edges[c], edges[c + 1], std::max(10.0 * step, 0.25), &errors[c]);
    };
    auto partials = parallel_chunked(chunks, chunk_fn);
    for (int c = 0; c < chunks; ++c) {
        out.value += partials[c];
        out.quad_error += errors[c];
    }
    return out;
}

FamilySumResult lhs_quadratic_family_sum(const ShiftSet& shifts, double X,
                                         conj::DiscriminantSign sign) {
    shifts.require_two_blocks();
    if (X > 1e5) throw Error("lhs_quadratic_family_sum: X <= 1e5");
    double floor = 0.5 / std::log(std::max(X, 3.0));
    for (const auto& a : shifts.alpha)
        if (a.real() < floor) throw Error("lhs_quadratic_family_sum: Re alpha >= 1/(2 log X)");
    for (const auto& g : shifts.gamma)
        if (g.real() < floor) throw Error("lhs_quadratic_family_sum: Re gamma >= 1/(2 log X)");
    auto family = fundamental_discriminants(static_cast<int64_t>(X),
                                            sign == conj::DiscriminantSign::Positive);
    FamilySumResult out;
    out.terms = family.count;
    std::mutex excl_mtx;
    const int chunks = 64;
    auto chunk_fn = [&](int c) -> Complex {
        Complex acc(0.0);
        for (size_t i = c; i < family.values.size(); i += chunks) {
            int64_t d = family.values[i];
            Complex num(1.0), den(1.0);
            for (const auto& a : shifts.alpha) num *= dirichlet_l(d, 0.5 + a);
            bool bad = false;
            for (const auto& g : shifts.gamma) {
                Complex v = dirichlet_l(d, 0.5 + g);
                if (std::abs(v) < 1e-10) bad = true;
                den *= v;
            }
            if (bad) {
                std::lock_guard<std::mutex> lock(excl_mtx);
                out.excluded.push_back(d);
                continue;
            }
            acc += num / den;
        }
        return acc;
    };
    auto partials = parallel_chunked(chunks, chunk_fn);
    for (const auto& p : partials) out.value += p;
    std::sort(out.excluded.begin(), out.excluded.end());
    if (out.excluded.size() * 1000 > static_cast<size_t>(family.count))
        throw NearZeroDenominator("lhs_quadratic_family_sum: more than 0.1% terms excluded");
    return out;
}

FamilySumResult lhs_elliptic_family_sum(const ShiftSet& shifts, double X, conj::Parity parity,
                                        const CoefficientTable& coeffs) {
    shifts.require_two_blocks();
    if (X > 5000.0) throw Error("lhs_elliptic_family_sum: X <= 5e3");
    if (parity == conj::Parity::Odd && shifts.Q() > 0)
        throw Error("lhs_elliptic_family_sum: odd parity forbids denominator shifts");
    int want = (parity == conj::Parity::Even) ? 1 : -1;
    std::vector<int64_t> family;
    for (bool positive : {true, false})
        for (int64_t d : fundamental_discriminants(static_cast<int64_t>(X), positive).values)
            if (d % 11 != 0 && twist_sign(d) == want) family.push_back(d);
    std::sort(family.begin(), family.end());
    FamilySumResult out;
    out.terms = static_cast<int64_t>(family.size());
    std::mutex excl_mtx;
    const int chunks = 64;
    auto chunk_fn = [&](int c) -> Complex {
        Complex acc(0.0);
        for (size_t i = c; i < family.size(); i += chunks) {
            int64_t d = family[i];
            Complex num(1.0), den(1.0);
            for (const auto& a : shifts.alpha) num *= elliptic_twist_l(coeffs, d, a);
            bool bad = false;
            for (const auto& g : shifts.gamma) {
                Complex v = elliptic_twist_l(coeffs, d, g);
                if (std::abs(v) < 1e-10) bad = true;
                den *= v;
            }
            if (bad) {
                std::lock_guard<std::mutex> lock(excl_mtx);
                out.excluded.push_back(d);
                continue;
            }
            acc += num / den;
        }
        return acc;
    };
    auto partials = parallel_chunked(chunks, chunk_fn);
    for (const auto& p : partials) out.value += p;
    std::sort(out.excluded.begin(), out.excluded.end());
    if (out.excluded.size() * 1000 > family.size())
        throw NearZeroDenominator("lhs_elliptic_family_sum: more than 0.1% terms excluded");
    return out;
}

SweepResult lhs_log_deriv_integral(Complex r, double T, double step) {
    if (T < 10.0 || T > 1e4) throw Error("lhs_log_deriv_integral: 10 <= T <= 1e4");
    if (r.real() < 0.25 / std::log(T)) throw Error("lhs_log_deriv_integral: Re r >= 1/(4 log T)");
    SweepResult out;
    const int chunks = 64;
    std::vector<double> edges(chunks + 1);
    for (int c = 0; c <= chunks; ++c) edges[c] = T * c / chunks;
    std::vector<double> errors(chunks, 0.0);
    const double rr = r.real();
    auto chunk_fn = [&](int c) -> Complex {
        CriticalLineZeta batch(T + 1.0, {rr}, {}, true);
        CriticalLineZeta::Values values;
        PanelIntegator integ;
        integ.f = [&](double t) -> Complex {
            if (r.imag() == 0.0) {
                batch.eval(t, values);
                return Complex(std::norm(values.up_d1[0] / values.up[0]));
            }
            Complex s = Complex(0.5, t) + r;
            return Complex(std::norm(zeta(s, 1) / zeta(s)));
        };
        return integ.integrate(edges[c], edges[c + 1], std::max(5.0 * step, 0.25), &errors[c]);
    };
    auto partials = parallel_chunked(chunks, chunk_fn);
    for (int c = 0; c < chunks; ++c) {
        out.value += partials[c];
        out.quad_error += errors[c];
    }
    return out;
}

Complex lhs_discrete_moment(Complex a, Complex c, double T) {
    if (T > 2000.0) throw Error("lhs_discrete_moment: T <= 2e3");
    double floor = 0.25 / std::log(T);
    if (std::abs(a) < floor || std::abs(c) < floor)
        throw Error("lhs_discrete_moment: |a|, |c| >= 1/(4 log T)");
    ZeroList zeros = zeta_zeros_up_to(T);
    if (a == c) return Complex(static_cast<double>(zeros.ordinates.size()));
    const int chunks = 32;
    auto chunk_fn = [&](int ci) -> Complex {
        Complex acc(0.0);
        for (size_t i = ci; i < zeros.ordinates.size(); i += chunks) {
            Complex rho(0.5, zeros.ordinates[i]);
            acc += zeta(rho + a) / zeta(rho + c);
        }
        return acc;
    };
    auto partials = parallel_chunked(chunks, chunk_fn);
    Complex total(0.0);
    for (const auto& p : partials) total += p;
    return total;
}

}  // namespace ratiolab::harness
