#include <algorithm>
#include <cmath>

#include "ratiolab/errors.hpp"
#include "ratiolab/rmt.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab::rmt {

int GroupSpec::matrix_size() const {
    switch (kind) {
        case GroupKind::Unitary: return n;
        case GroupKind::Symplectic: return 2 * n;
        case GroupKind::SOEven: return 2 * n;
        case GroupKind::SOOdd: return 2 * n + 1;
    }
    return n;
}

void GroupSpec::validate(const ShiftSet& s) const {
    if (n < 1) throw Error("GroupSpec: N >= 1");
    int K = s.K(), L = s.L(), Q = s.Q(), R = s.R();
    bool ok = true;
    switch (kind) {
        case GroupKind::Unitary: ok = n >= std::max(Q - K, R - L); break;
        case GroupKind::Symplectic:
            s.require_two_blocks();
            ok = 2 * n >= Q - K - 1;
            break;
        case GroupKind::SOEven:
            s.require_two_blocks();
            ok = 2 * n >= Q - K + 1;
            break;
        case GroupKind::SOOdd:
            s.require_two_blocks();
            ok = 2 * n >= Q - K;
            break;
    }
    if (!ok) throw Error("GroupSpec: size bound of the exact formula violated");
}

Complex z_value(Complex x) {
    double dist = distance_to_z_poles(x);
    if (dist < 1e-12) throw PolePoint("z_value: x at a 2 pi i Z pole");
    if (std::abs(x) < 0.75) return z_linear(x) / x;
    return 1.0 / (1.0 - std::exp(-x));
}

Complex z_linear(Complex x) {
    if (std::abs(x) < 0.75) {
        // x z(x) = 1 + x/2 + sum_k B_{2k} x^{2k} / (2k)!
        Complex x2 = x * x;
        Complex term(1.0);
        Complex acc = 1.0 + x / 2.0;
        double fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            term *= x2;
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            acc += bernoulli_2k(k) / fact * term;
        }
        return acc;
    }
    return x / (1.0 - std::exp(-x));
}

namespace {

constexpr double kZGuard = 1e-8;

Complex z_guarded(Complex x) {
    if (distance_to_z_poles(x) < kZGuard)
        throw CoincidentShifts("theorem_rhs: z argument within 1e-8 of its pole lattice");
    return z_value(x);
}

Complex y_u_z(const std::vector<Complex>& alpha, const std::vector<Complex>& beta,
              const std::vector<Complex>& gamma, const std::vector<Complex>& delta) {
    Complex num(1.0), den(1.0);
    for (const auto& a : alpha)
        for (const auto& b : beta) num *= z_guarded(a + b);
    for (const auto& g : gamma)
        for (const auto& d : delta) num *= z_guarded(g + d);
    for (const auto& a : alpha)
        for (const auto& d : delta) den *= z_guarded(a + d);
    for (const auto& b : beta)
        for (const auto& g : gamma) den *= z_guarded(b + g);
    return num / den;
}

// y_S (diagonal included) or y_O (diagonal excluded, plus z(2 gamma_q))
Complex y_so_z(const std::vector<Complex>& alpha, const std::vector<Complex>& gamma,
               bool diagonal_alpha) {
    int K = static_cast<int>(alpha.size()), Q = static_cast<int>(gamma.size());
    Complex num(1.0), den(1.0);
    for (int j = 0; j < K; ++j)
        for (int k = diagonal_alpha ? j : j + 1; k < K; ++k) num *= z_guarded(alpha[j] + alpha[k]);
    for (int q = 0; q < Q; ++q)
        for (int r = q + 1; r < Q; ++r) num *= z_guarded(gamma[q] + gamma[r]);
    if (!diagonal_alpha)
        for (int q = 0; q < Q; ++q) num *= z_guarded(2.0 * gamma[q]);
    for (int k = 0; k < K; ++k)
        for (int q = 0; q < Q; ++q) den *= z_guarded(alpha[k] + gamma[q]);
    return num / den;
}

Complex theorem_rhs_unitary(int N, const ShiftSet& s) {
    int K = s.K(), L = s.L();
    // combined shift vector (alpha_1..alpha_K, -beta_1..-beta_L)
    std::vector<Complex> a(s.alpha);
    for (const auto& b : s.beta) a.push_back(-b);
    Complex base_sum(0.0);
    for (int k = 0; k < K; ++k) base_sum += a[k];
    // sigma in Xi_{K,L} <-> increasing K-subset of {0..K+L-1} (the head images)
    int m = K + L;
    std::vector<int> head(K);
    for (int i = 0; i < K; ++i) head[i] = i;
    Complex total(0.0);
    while (true) {
        std::vector<bool> in_head(m, false);
        for (int h : head) in_head[h] = true;
        std::vector<Complex> eff_alpha, eff_beta;
        Complex head_sum(0.0);
        for (int h : head) {
            eff_alpha.push_back(a[h]);
            head_sum += a[h];
        }
        for (int j = 0; j < m; ++j)
            if (!in_head[j]) eff_beta.push_back(-a[j]);
        total += std::exp(static_cast<double>(N) * (head_sum - base_sum)) *
                 y_u_z(eff_alpha, eff_beta, s.gamma, s.delta);
        // next combination
        int i = K - 1;
        while (i >= 0 && head[i] == m - K + i) --i;
        if (i < 0) break;
        ++head[i];
        for (int j = i + 1; j < K; ++j) head[j] = head[j - 1] + 1;
    }
    return total;
}

// half = half the matrix size: N for USp(2N) and SO(2N), N + 1/2 for
// SO(2N+1). The half-integer case is forced by direct computation: the
// average of Lambda_A(e^{-alpha}) over SO(3) is 1 - e^{-3 alpha}.
Complex theorem_rhs_signed(double half, const ShiftSet& s, bool diagonal_alpha, bool signed_sum) {
    int K = s.K();
    Complex alpha_sum(0.0);
    for (const auto& a : s.alpha) alpha_sum += a;
    Complex total(0.0);
    for (int mask = 0; mask < (1 << K); ++mask) {
        std::vector<Complex> w(s.alpha);
        int sgn = 1;
        Complex w_sum(0.0);
        for (int k = 0; k < K; ++k) {
            if (mask & (1 << k)) {
                w[k] = -w[k];
                sgn = -sgn;
            }
            w_sum += w[k];
        }
        Complex term = std::exp(half * (w_sum - alpha_sum)) * y_so_z(w, s.gamma, diagonal_alpha);
        total += (signed_sum && sgn < 0) ? -term : term;
    }
    return total;
}

}  // namespace

Complex theorem_rhs(const GroupSpec& group, const RatioSpec& spec) {
    group.validate(spec.shifts);
    switch (group.kind) {
        case GroupKind::Unitary: return theorem_rhs_unitary(group.n, spec.shifts);
        case GroupKind::Symplectic:
            return theorem_rhs_signed(group.n, spec.shifts, true, false);
        case GroupKind::SOEven:
            return theorem_rhs_signed(group.n, spec.shifts, false, false);
        case GroupKind::SOOdd:
            return theorem_rhs_signed(group.n + 0.5, spec.shifts, false, true);
    }
    throw Error("theorem_rhs: unknown group");
}

Complex char_poly(const EigenphaseSet& ph, Complex s, bool conjugate) {
    Complex prod(1.0);
    double sign = conjugate ? 1.0 : -1.0;
    if (ph.kind == GroupKind::Unitary) {
        for (double th : ph.phases) prod *= 1.0 - s * std::polar(1.0, sign * th);
        return prod;
    }
    for (double th : ph.phases)
        prod *= (1.0 - s * std::polar(1.0, th)) * (1.0 - s * std::polar(1.0, -th));
    if (ph.has_fixed_one) prod *= 1.0 - s;
    return prod;
}

Complex ratio_statistic(const EigenphaseSet& ph, const RatioSpec& spec) {
    const ShiftSet& s = spec.shifts;
    if (ph.kind != GroupKind::Unitary) s.require_two_blocks();
    Complex num(1.0), den(1.0);
    for (const auto& a : s.alpha) num *= char_poly(ph, std::exp(-a), false);
    for (const auto& b : s.beta) num *= char_poly(ph, std::exp(-b), true);
    for (const auto& g : s.gamma) {
        Complex f = char_poly(ph, std::exp(-g), false);
        if (std::abs(f) < 1e-13) throw NearSingularSample("ratio_statistic: denominator ~ 0");
        den *= f;
    }
    for (const auto& d : s.delta) {
        Complex f = char_poly(ph, std::exp(-d), true);
        if (std::abs(f) < 1e-13) throw NearSingularSample("ratio_statistic: denominator ~ 0");
        den *= f;
    }
    return num / den;
}

}  // namespace ratiolab::rmt
