#pragma once

#include <cstdint>
#include <vector>

#include "ratiolab/e11.hpp"
#include "ratiolab/shifts.hpp"
#include "ratiolab/types.hpp"

namespace ratiolab {

struct EulerConfig {
    int64_t prime_cutoff = 10000;
    int theta_nodes = 64;  // power of two >= 64, starting node count
    int lattice_order = 12;
    enum class TailPolicy { DoublingCheck, Fixed };
    TailPolicy tail_policy = TailPolicy::DoublingCheck;
    double tail_tolerance = 1e-4;

    void validate() const;
};

struct EulerValue {
    Complex value{1.0};
    double tail_estimate = 0.0;
};

struct LocalFactor {
    int64_t p = 0;
    Complex value{1.0};
};

enum class Symmetry { U, S, O };

// Y_U / Y_S / Y_O: the zeta(1+.) blocks carrying the main-term zeros/poles.
Complex y_factor(Symmetry symmetry, const ShiftSet& shifts);

enum class LocalForm { ThetaIntegral, LatticeSum };

// One local factor of A_zeta at p (prefactor times local sum), by either the
// theta-quadrature of the rational integrand or the truncated lattice sum
// over (a, b, c, d) with sum a + sum c = sum b + sum d.
Complex a_zeta_local(int64_t p, const ShiftSet& shifts, const EulerConfig& cfg, LocalForm form);
EulerValue a_zeta(const ShiftSet& shifts, const EulerConfig& cfg,
                  LocalForm form = LocalForm::ThetaIntegral);

enum class EvenSumForm { ClosedForm, DirectSum };

// A_D for the quadratic-character families; (alpha; gamma) blocks only.
Complex a_quadratic_local(int64_t p, const ShiftSet& shifts, const EulerConfig& cfg,
                          EvenSumForm form);
EulerValue a_quadratic(const ShiftSet& shifts, const EulerConfig& cfg,
                       EvenSumForm form = EvenSumForm::ClosedForm);

// A_{E11(D)} for the elliptic twist families; needs lambda(p) up to the cutoff.
Complex a_elliptic_local(int64_t p, const ShiftSet& shifts, const EulerConfig& cfg,
                         EvenSumForm form, const CoefficientTable& coeffs);
EulerValue a_elliptic(const ShiftSet& shifts, const EulerConfig& cfg,
                      const CoefficientTable& coeffs, EvenSumForm form = EvenSumForm::ClosedForm);

// Shifted Keating-Snaith Euler product B(alpha, delta); equals b_K at zero
// shifts. This is A_zeta specialized to (alpha; -; -; delta).
EulerValue ks_b(const std::vector<Complex>& alphas, const std::vector<Complex>& deltas,
                const EulerConfig& cfg);

// Shared prime cache (grows on demand, thread-safe).
const std::vector<int64_t>& primes_up_to(int64_t cutoff);

}  // namespace ratiolab
