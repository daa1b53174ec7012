#pragma once

#include <vector>

#include "ratiolab/types.hpp"

namespace ratiolab {

// The shift tuples (alpha_1..alpha_K; beta_1..beta_L; gamma_1..gamma_Q;
// delta_1..delta_R). Symplectic/orthogonal contexts use only (alpha; gamma).
struct ShiftSet {
    std::vector<Complex> alpha, beta, gamma, delta;

    int K() const { return static_cast<int>(alpha.size()); }
    int L() const { return static_cast<int>(beta.size()); }
    int Q() const { return static_cast<int>(gamma.size()); }
    int R() const { return static_cast<int>(delta.size()); }

    // Re(gamma_q), Re(delta_r) > 0; throws otherwise.
    void require_denominator_shifts_positive() const;
    // all shifts within the Euler-product convergence disk |shift| <= 0.45
    void require_in_convergence_disk() const;
    // no beta/delta blocks (symplectic & orthogonal families)
    void require_two_blocks() const;
};

// Distance from x to the lattice 2 pi i Z (pole set of z(x)).
double distance_to_z_poles(Complex x);

}  // namespace ratiolab
