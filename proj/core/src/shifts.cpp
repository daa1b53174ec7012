#include "ratiolab/shifts.hpp"

#include <cmath>

#include "ratiolab/errors.hpp"

namespace ratiolab {

void ShiftSet::require_denominator_shifts_positive() const {
    for (const auto& g : gamma)
        if (!(g.real() > 0.0)) throw Error("ShiftSet: Re(gamma) > 0 required");
    for (const auto& d : delta)
        if (!(d.real() > 0.0)) throw Error("ShiftSet: Re(delta) > 0 required");
}

void ShiftSet::require_in_convergence_disk() const {
    auto check = [](const std::vector<Complex>& block) {
        for (const auto& s : block)
            if (std::abs(s) > 0.45) throw Error("ShiftSet: |shift| <= 0.45 required");
    };
    check(alpha);
    check(beta);
    check(gamma);
    check(delta);
}

void ShiftSet::require_two_blocks() const {
    if (!beta.empty() || !delta.empty())
        throw Error("ShiftSet: beta/delta blocks not allowed here");
}

double distance_to_z_poles(Complex x) {
    double k = std::round(x.imag() / kTwoPi);
    return std::abs(x - Complex(0.0, kTwoPi * k));
}

}  // namespace ratiolab
