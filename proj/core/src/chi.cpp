#include "ratiolab/chi.hpp"

#include <cmath>

#include "ratiolab/errors.hpp"
#include "ratiolab/gamma.hpp"

namespace ratiolab {

Complex log_chi(Complex s) {
    return s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(kPi * s / 2.0) +
           log_gamma(1.0 - s);
}

Complex chi_factor(Complex s) { return std::exp(log_chi(s)); }

Complex ChiSqrtTracker::value(Complex s) {
    Complex lg = log_chi(s);
    if (!primed_) {
        // normalize the starting point to the principal branch
        double k = std::floor((lg.imag() + kPi) / kTwoPi);
        lg = Complex(lg.real(), lg.imag() - kTwoPi * k);
        primed_ = true;
    } else {
        double k = std::round((prev_log_.imag() - lg.imag()) / kTwoPi);
        lg = Complex(lg.real(), lg.imag() + kTwoPi * k);
        if (std::abs(lg.imag() - prev_log_.imag()) > kPi / 2.0)
            throw BranchAmbiguity("ChiSqrtTracker: sweep step crosses the cut");
    }
    prev_log_ = lg;
    return std::exp(0.5 * lg);
}

}  // namespace ratiolab
