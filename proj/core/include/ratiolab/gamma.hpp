#pragma once

#include "ratiolab/types.hpp"

namespace ratiolab {

// log Gamma(z), accurate to ~1e-13 relative in Gamma. The imaginary part is
// not reduced to a principal range: exp(log_gamma(z)) == Gamma(z) always,
// and differences of two calls are safe to exponentiate.
Complex log_gamma(Complex z);

Complex gamma_fn(Complex z);

// log sin(z), overflow-safe for large |Im z|; same branch caveat as log_gamma.
Complex log_sin(Complex z);

enum class GVariant { Plus, Minus, Elliptic };

// Gamma-ratio factors of the asymmetric functional equations:
//   Plus:      g_+(s) = Gamma((1-s)/2) / Gamma(s/2)
//   Minus:     g_-(s) = Gamma((2-s)/2) / Gamma((s+1)/2)
//   Elliptic:  g(s)   = Gamma(1-s)     / Gamma(s)
Complex g_factor(GVariant variant, Complex s);

// Gamma(3/2-s)/Gamma(s+1/2): the functional-equation ratio of a weight-2
// newform in the analytic normalization (the completed form carries
// Gamma(s+1/2)). Equals 1 at s = 1/2.
Complex gamma_ratio_weight2(Complex s);

// Upper incomplete Gamma(s, x) for x >= 0, relative error <= 1e-8.
Complex upper_incomplete_gamma(Complex s, double x);

// Regularized form Gamma(s,x)/Gamma(s).
Complex upper_incomplete_gamma_regularized(Complex s, double x);

}  // namespace ratiolab
