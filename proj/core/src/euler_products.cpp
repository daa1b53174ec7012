#include <cmath>
#include <memory>
#include <mutex>

#include "ratiolab/errors.hpp"
#include "ratiolab/euler.hpp"
#include "ratiolab/primes.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab {

void EulerConfig::validate() const {
    if (prime_cutoff < 100) throw BadConfig("EulerConfig: prime_cutoff >= 100");
    if (theta_nodes < 64 || (theta_nodes & (theta_nodes - 1)) != 0)
        throw BadConfig("EulerConfig: theta_nodes must be a power of two >= 64");
    if (lattice_order < 2) throw BadConfig("EulerConfig: lattice_order >= 2");
    if (!(tail_tolerance > 0.0)) throw BadConfig("EulerConfig: tail_tolerance > 0");
}

const std::vector<int64_t>& primes_up_to(int64_t cutoff) {
    static std::mutex mtx;
    static std::shared_ptr<PrimeTable> table;
    static thread_local std::shared_ptr<PrimeTable> local;
    if (local && local->cutoff >= cutoff) return local->primes;
    std::lock_guard<std::mutex> lock(mtx);
    if (!table || table->cutoff < cutoff)
        table = std::make_shared<PrimeTable>(PrimeTable::build(std::max<int64_t>(cutoff, 1024)));
    local = table;
    return local->primes;
}

Complex y_factor(Symmetry symmetry, const ShiftSet& s) {
    auto z1 = [](Complex x) { return zeta(Complex(1.0) + x); };
    Complex num(1.0), den(1.0);
    int K = s.K(), Q = s.Q();
    switch (symmetry) {
        case Symmetry::U:
            for (const auto& a : s.alpha)
                for (const auto& b : s.beta) num *= z1(a + b);
            for (const auto& g : s.gamma)
                for (const auto& d : s.delta) num *= z1(g + d);
            for (const auto& a : s.alpha)
                for (const auto& d : s.delta) den *= z1(a + d);
            for (const auto& b : s.beta)
                for (const auto& g : s.gamma) den *= z1(b + g);
            break;
        case Symmetry::S:
            s.require_two_blocks();
            for (int j = 0; j < K; ++j)
                for (int k = j; k < K; ++k) num *= z1(s.alpha[j] + s.alpha[k]);
            for (int q = 0; q < Q; ++q)
                for (int r = q + 1; r < Q; ++r) num *= z1(s.gamma[q] + s.gamma[r]);
            for (int k = 0; k < K; ++k)
                for (int q = 0; q < Q; ++q) den *= z1(s.alpha[k] + s.gamma[q]);
            break;
        case Symmetry::O:
            s.require_two_blocks();
            for (int j = 0; j < K; ++j)
                for (int k = j + 1; k < K; ++k) num *= z1(s.alpha[j] + s.alpha[k]);
            for (int q = 0; q < Q; ++q)
                for (int r = q + 1; r < Q; ++r) num *= z1(s.gamma[q] + s.gamma[r]);
            for (int q = 0; q < Q; ++q) num *= z1(2.0 * s.gamma[q]);
            for (int k = 0; k < K; ++k)
                for (int q = 0; q < Q; ++q) den *= z1(s.alpha[k] + s.gamma[q]);
            break;
    }
    return num / den;
}

namespace {

template <typename LocalFn>
EulerValue certified_product(const EulerConfig& cfg, LocalFn&& local) {
    cfg.validate();
    const auto& primes = primes_up_to(cfg.prime_cutoff);
    Complex prod(1.0);
    Complex at_half(1.0);
    bool half_recorded = false;
    for (int64_t p : primes) {
        if (p > cfg.prime_cutoff) break;
        if (!half_recorded && 2 * p > cfg.prime_cutoff) {
            at_half = prod;
            half_recorded = true;
        }
        prod *= local(p);
    }
    double delta = std::abs(prod - at_half);
    if (cfg.tail_policy == EulerConfig::TailPolicy::DoublingCheck &&
        delta > cfg.tail_tolerance * std::max(1.0, std::abs(prod)))
        throw TailNotConverged("euler product: P/2 -> P movement above tolerance");
    return {prod, delta};
}

}  // namespace

EulerValue a_zeta(const ShiftSet& shifts, const EulerConfig& cfg, LocalForm form) {
    shifts.require_in_convergence_disk();
    return certified_product(cfg, [&](int64_t p) { return a_zeta_local(p, shifts, cfg, form); });
}

EulerValue a_quadratic(const ShiftSet& shifts, const EulerConfig& cfg, EvenSumForm form) {
    shifts.require_in_convergence_disk();
    shifts.require_two_blocks();
    return certified_product(cfg,
                             [&](int64_t p) { return a_quadratic_local(p, shifts, cfg, form); });
}

EulerValue a_elliptic(const ShiftSet& shifts, const EulerConfig& cfg,
                      const CoefficientTable& coeffs, EvenSumForm form) {
    shifts.require_in_convergence_disk();
    shifts.require_two_blocks();
    if (coeffs.max_index() < cfg.prime_cutoff)
        throw MissingCoefficients("a_elliptic: coefficient table shorter than prime cutoff");
    return certified_product(
        cfg, [&](int64_t p) { return a_elliptic_local(p, shifts, cfg, form, coeffs); });
}

EulerValue ks_b(const std::vector<Complex>& alphas, const std::vector<Complex>& deltas,
                const EulerConfig& cfg) {
    if (alphas.size() != deltas.size()) throw Error("ks_b: |alphas| == |deltas| required");
    ShiftSet s;
    s.alpha = alphas;
    s.delta = deltas;
    return a_zeta(s, cfg, LocalForm::ThetaIntegral);
}

}  // namespace ratiolab
