#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ratiolab/shifts.hpp"
#include "ratiolab/types.hpp"

namespace ratiolab::rmt {

enum class GroupKind { Unitary, Symplectic, SOEven, SOOdd };

// Group of the average: matrix sizes are N, 2N, 2N, 2N+1 respectively.
struct GroupSpec {
    GroupKind kind = GroupKind::Unitary;
    int n = 1;

    int matrix_size() const;
    // Size bounds of the exact formulas: U needs N >= max(Q-K, R-L),
    // USp 2N >= Q-K-1, SO(2N) 2N >= Q-K+1, SO(2N+1) 2N >= Q-K.
    void validate(const ShiftSet& shifts) const;
};

struct EigenphaseSet {
    GroupKind kind = GroupKind::Unitary;
    // U: all N phases in [0, 2pi). Others: pair representatives in [0, pi].
    std::vector<double> phases;
    bool has_fixed_one = false;
};

// Ratio shifts with the positivity invariant Re gamma, Re delta > 0.
struct RatioSpec {
    ShiftSet shifts;
    explicit RatioSpec(ShiftSet s) : shifts(std::move(s)) {
        shifts.require_denominator_shifts_positive();
    }
};

// z(x) = 1/(1 - e^{-x}), the random-matrix stand-in for zeta(1+x);
// series evaluation near 0. Throws PolePoint within 1e-12 of 2 pi i Z.
Complex z_value(Complex x);
// x z(x), analytic through x = 0; regularizes contour integrands.
Complex z_linear(Complex x);

// Dense matrix in row-major order (complex; real groups embed trivially).
struct ComplexMatrix {
    int n = 0;
    std::vector<Complex> data;

    Complex& at(int i, int j) { return data[static_cast<size_t>(i) * n + j]; }
    const Complex& at(int i, int j) const { return data[static_cast<size_t>(i) * n + j]; }
};

// One Haar-distributed group element (QR of a Ginibre matrix over C / R / H
// with the diagonal phase fix; SO sector by a fixed-reflection correction).
ComplexMatrix haar_matrix(const GroupSpec& group, std::mt19937_64& rng);

EigenphaseSet extract_eigenphases(const GroupSpec& group, const ComplexMatrix& m);

EigenphaseSet haar_sample(const GroupSpec& group, std::mt19937_64& rng);

// Characteristic polynomial Lambda_A(s) = prod (1 - s e^{-i theta}) over the
// full spectrum; conjugate = true evaluates Lambda_{A*}.
Complex char_poly(const EigenphaseSet& phases, Complex s, bool conjugate = false);

// The sampled ratio statistic
//   prod_k Lambda_A(e^{-alpha_k}) prod_l Lambda_{A*}(e^{-beta_l})
//   / ( prod_q Lambda_A(e^{-gamma_q}) prod_r Lambda_{A*}(e^{-delta_r}) ).
Complex ratio_statistic(const EigenphaseSet& phases, const RatioSpec& spec);

struct McResult {
    Complex estimate{0.0};
    double std_error = 0.0;
    int64_t samples = 0;
    int64_t rejected = 0;
};

// Monte Carlo Haar average over fixed per-shard substreams; deterministic
// for a given (seed, samples) independent of thread count.
McResult mc_average(const GroupSpec& group, const RatioSpec& spec, int64_t samples,
                    uint64_t seed);

// Exact group average via the combinatorial sums (Xi_{K,L} for U, signed
// epsilon-sums for USp/SO). Throws CoincidentShifts when a z argument comes
// within 1e-8 of 2 pi i Z.
Complex theorem_rhs(const GroupSpec& group, const RatioSpec& spec);

// Independent check: quadrature of the ratio statistic against the joint
// eigenphase density (Weyl integration formula), node-doubling certified to
// 1e-9. Eigenphase dimension (n) must be <= 3.
Complex weyl_oracle(const GroupSpec& group, const RatioSpec& spec, int nodes_per_dim = 32);

// Same value as theorem_rhs through the multi-circle contour reformulation
// (Vandermonde-squared integrand). Requires |alpha_k| < 1 and K+L <= 3.
Complex contour_rhs(const GroupSpec& group, const RatioSpec& spec, int nodes_per_dim = 64);

}  // namespace ratiolab::rmt
