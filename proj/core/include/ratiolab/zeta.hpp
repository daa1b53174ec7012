#pragma once

#include <vector>

#include "ratiolab/types.hpp"

namespace ratiolab {

// Even Bernoulli numbers B_{2k}, k <= 30.
double bernoulli_2k(int k);

// Riemann zeta by Euler-Maclaurin with a certified Bernoulli-tail bound.
// deriv_order 0 returns zeta(s), 1 returns zeta'(s).
// Domain: |s-1| > 1e-6, certified to ~1e-12 relative for |Im s| <= 1e5.
Complex zeta(Complex s, int deriv_order = 0);

// Hurwitz zeta(s, a) for a in (0, 1], same engine.
Complex hurwitz_zeta(Complex s, double a);

struct ZetaDerivatives {
    Complex value, d1, d2;
};
// zeta with first and second derivative in one pass (jet arithmetic).
ZetaDerivatives zeta_jet(Complex s);

// Batched zeta values along the critical line. For a fixed set of real
// shifts, eval(t) returns
//   up[j]   = zeta(1/2 + it + up_shift[j])
//   down[j] = zeta(1/2 - it + down_shift[j])
// sharing one m^{-it} phase per series term across all shifts. Optional
// first derivatives (d/ds at the shifted point) for the log-derivative
// integrand. Reentrant: eval takes a caller-owned workspace.
class CriticalLineZeta {
  public:
    CriticalLineZeta(double t_max, std::vector<double> up_shifts,
                     std::vector<double> down_shifts, bool with_derivative = false);

    struct Values {
        std::vector<Complex> up, down, up_d1, down_d1;
    };

    void eval(double t, Values& out) const;

    const std::vector<double>& up_shifts() const { return up_; }
    const std::vector<double>& down_shifts() const { return down_; }

  private:
    std::vector<double> up_, down_;
    bool deriv_;
    int n_max_;
    std::vector<double> logn_;                   // log m, 1-based
    std::vector<std::vector<double>> pw_up_;     // m^{-1/2-shift}
    std::vector<std::vector<double>> pw_down_;
};

// Truncation point used by the engine at height |Im s| = t.
int zeta_em_truncation(double t);

}  // namespace ratiolab
