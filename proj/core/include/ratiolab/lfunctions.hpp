#pragma once

#include <cstdint>

#include "ratiolab/e11.hpp"
#include "ratiolab/types.hpp"

namespace ratiolab {

// L(s, chi_d) for a fundamental discriminant d via the Hurwitz-zeta split
// |d|^{-s} sum_{a=1}^{|d|} chi_d(a) zeta(s, a/|d|); valid for all s != 1.
// d = 1 degenerates to zeta (with its pole).
Complex dirichlet_l(int64_t d, Complex s);

// L_{E11}(1/2 + shift, chi_d) by the smoothed approximate functional
// equation with incomplete-gamma weights:
//   L(s) = [ sum_n lam chi(n) n^{-s} Gamma(s, n/(kappa X))
//          + w kappa^{1-2s} sum_n lam chi(n) n^{s-1} Gamma(1-s, n X/kappa) ]
//          / Gamma(s),   kappa = sqrt(11) |d| / (2 pi).
// The series cutoff is grown until the certified remainder drops below
// `tolerance` (CutoffNotCertified otherwise). length_scale widens the cut
// for self-consistency checks.
Complex elliptic_twist_l(const CoefficientTable& coeffs, int64_t d, Complex shift,
                         double tolerance = 1e-9, double length_scale = 1.0,
                         double balance = 1.0);

}  // namespace ratiolab
