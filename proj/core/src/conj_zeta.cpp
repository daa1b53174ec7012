#include <cmath>

#include "ratiolab/chi.hpp"
#include "ratiolab/conjectures.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab::conj {

std::vector<std::pair<std::vector<int>, std::vector<int>>> xi_permutations(int K, int L) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    int m = K + L;
    std::vector<int> head(K);
    for (int i = 0; i < K; ++i) head[i] = i;
    while (true) {
        std::vector<bool> in_head(m, false);
        for (int h : head) in_head[h] = true;
        std::vector<int> tail;
        for (int j = 0; j < m; ++j)
            if (!in_head[j]) tail.push_back(j);
        out.emplace_back(head, tail);
        int i = K - 1;
        while (i >= 0 && head[i] == m - K + i) --i;
        if (i < 0) break;
        ++head[i];
        for (int j = i + 1; j < K; ++j) head[j] = head[j - 1] + 1;
    }
    return out;
}

namespace {

// A zeta(1) hit in Y_U's numerator diverges: refuse. A hit in the
// denominator sends the whole sigma-term to zero (the limit is exact):
// report it so the caller can skip the term.
bool term_vanishes(const ShiftSet& s) {
    auto throw_near = [](Complex x) {
        if (std::abs(x) < 1e-6)
            throw CoincidentShifts("conj_zeta_rhs: zeta(1+x) argument within 1e-6 of the pole");
    };
    for (const auto& a : s.alpha)
        for (const auto& b : s.beta) throw_near(a + b);
    for (const auto& g : s.gamma)
        for (const auto& d : s.delta) throw_near(g + d);
    for (const auto& a : s.alpha)
        for (const auto& d : s.delta)
            if (std::abs(a + d) < 1e-6) return true;
    for (const auto& b : s.beta)
        for (const auto& g : s.gamma)
            if (std::abs(b + g) < 1e-6) return true;
    return false;
}

}  // namespace

ConjectureValue conj_zeta_rhs(const ShiftSet& shifts, double T, const EulerConfig& cfg,
                              ChiMode mode) {
    shifts.require_denominator_shifts_positive();
    const int K = shifts.K(), L = shifts.L();
    for (const auto& x : shifts.alpha)
        if (x.real() <= -0.5 / (K + L)) throw Error("conj_zeta_rhs: Re(alpha) bound violated");
    for (const auto& x : shifts.beta)
        if (x.real() <= -0.5 / (K + L)) throw Error("conj_zeta_rhs: Re(beta) bound violated");
    auto im_ok = [&](const std::vector<Complex>& v) {
        for (const auto& x : v)
            if (std::abs(x.imag()) > T / 10.0)
                throw Error("conj_zeta_rhs: |Im shift| <= T/10 required");
    };
    im_ok(shifts.alpha);
    im_ok(shifts.beta);
    im_ok(shifts.gamma);
    im_ok(shifts.delta);
    if (T < 2.0) throw Error("conj_zeta_rhs: T >= 2 required");

    std::vector<Complex> a(shifts.alpha);
    for (const auto& b : shifts.beta) a.push_back(-b);

    struct Term {
        Complex coeff;                          // Y_U A_zeta at substituted shifts
        Complex exponent_sum;                   // sum(a_head) - sum(a_base)
        std::vector<int> base_only, head_only;  // symmetric difference of index sets
    };
    std::vector<Term> terms;
    double budget = 0.0;
    for (const auto& [head, tail] : xi_permutations(K, L)) {
        ShiftSet eff;
        for (int h : head) eff.alpha.push_back(a[h]);
        for (int t : tail) eff.beta.push_back(-a[t]);
        eff.gamma = shifts.gamma;
        eff.delta = shifts.delta;
        if (term_vanishes(eff)) continue;
        EulerValue av = a_zeta(eff, cfg);
        Complex yv = y_factor(Symmetry::U, eff);
        Term term;
        term.coeff = yv * av.value;
        budget += av.tail_estimate * std::max(1.0, std::abs(yv));
        Complex es(0.0);
        std::vector<bool> in_head(K + L, false);
        for (int h : head) in_head[h] = true;
        for (int k = 0; k < K; ++k) {
            es -= a[k];
            if (!in_head[k]) term.base_only.push_back(k);
        }
        for (int h : head) {
            es += a[h];
            if (h >= K) term.head_only.push_back(h);
        }
        term.exponent_sum = es;
        terms.push_back(std::move(term));
    }

    auto integrand = [&](double t) {
        Complex s(0.5, t);
        Complex total(0.0);
        for (const auto& term : terms) {
            Complex chi_ratio;
            if (mode == ChiMode::TOver2PiPower) {
                chi_ratio = std::exp(term.exponent_sum * std::log(t / kTwoPi));
            } else {
                Complex lg(0.0);
                for (int j : term.base_only) lg += log_chi(s + a[j]);
                for (int j : term.head_only) lg -= log_chi(s + a[j]);
                chi_ratio = std::exp(lg);
            }
            total += term.coeff * chi_ratio;
        }
        return total;
    };
    QuadResult q = integrate_adaptive(integrand, 1.0, T, 1e-8, 0.0,
                                      std::max(8, static_cast<int>(T / 64.0)));
    return {q.value, budget * (T - 1.0) + q.error_estimate};
}

Complex farmer_leading(Complex alpha, Complex beta, Complex gamma, Complex delta, double T) {
    if (std::abs(alpha + beta) < 1e-12 || std::abs(gamma + delta) < 1e-12)
        throw DegenerateShifts("farmer_leading: alpha+beta and gamma+delta must be nonzero");
    Complex damp = 1.0 - std::exp(-(alpha + beta) * std::log(T));
    return 1.0 + damp * (alpha - gamma) * (beta - delta) / ((alpha + beta) * (gamma + delta));
}

}  // namespace ratiolab::conj
