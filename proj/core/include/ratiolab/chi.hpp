#pragma once

#include "ratiolab/types.hpp"

namespace ratiolab {

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), the asymmetric
// functional-equation factor: zeta(s) = chi(s) zeta(1-s).
Complex chi_factor(Complex s);

// A branch of log chi(s); exp(log_chi(s)) == chi_factor(s) exactly, but the
// imaginary part is not reduced. Ratios chi(x)/chi(y) should be formed as
// exp(log_chi(x) - log_chi(y)).
Complex log_chi(Complex s);

// chi(s)^{1/2} along a monotone-in-t sweep at (piecewise) fixed sigma.
// The first value takes the principal branch of log chi; later values are
// unwound by nearest-2pi continuation. Throws BranchAmbiguity when two
// consecutive calls move the argument by more than pi/2 (step too coarse to
// disambiguate the sheet).
class ChiSqrtTracker {
  public:
    Complex value(Complex s);
    void reset() { primed_ = false; }

  private:
    bool primed_ = false;
    Complex prev_log_{};
};

}  // namespace ratiolab
