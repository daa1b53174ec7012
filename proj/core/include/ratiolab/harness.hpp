#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ratiolab/conjectures.hpp"
#include "ratiolab/e11.hpp"
#include "ratiolab/shifts.hpp"
#include "ratiolab/types.hpp"

namespace ratiolab::harness {

// Integral over [1, T] of the zeta ratio along s = 1/2 + it; composite
// Gauss panels with step-halving certification. Nodes where a denominator
// zeta falls below 1e-8 are refined locally and reported.
struct SweepResult {
    Complex value{0.0};
    double quad_error = 0.0;
    std::vector<double> flagged_nodes;
};
SweepResult lhs_zeta_ratio_integral(const ShiftSet& shifts, double T, double step = 0.05);

struct FamilySumResult {
    Complex value{0.0};
    int64_t terms = 0;
    std::vector<int64_t> excluded;  // flagged discriminants, never silently dropped
};
FamilySumResult lhs_quadratic_family_sum(const ShiftSet& shifts, double X,
                                         conj::DiscriminantSign sign);
FamilySumResult lhs_elliptic_family_sum(const ShiftSet& shifts, double X, conj::Parity parity,
                                        const CoefficientTable& coeffs);

// Integral over [0, T] of |zeta'/zeta(1/2 + r + it)|^2.
SweepResult lhs_log_deriv_integral(Complex r, double T, double step = 0.05);

// D(a, c) = sum over zeros gamma <= T of zeta(rho + a)/zeta(rho + c).
Complex lhs_discrete_moment(Complex a, Complex c, double T);

enum class FamilyKind { ZetaT, QuadraticPositive, QuadraticNegative, EllipticEvenTwists,
                        EllipticOddTwists };

struct ExperimentConfig {
    FamilyKind family = FamilyKind::ZetaT;
    ShiftSet shifts;
    double sweep_bound = 1000.0;  // T or X
    double step = 0.05;
    int64_t samples = 0;
    uint64_t seed = 1;
    EulerConfig euler;
    conj::ChiMode chi_mode = conj::ChiMode::ExactGamma;
    double tolerance = 0.05;
    std::string output_path;   // empty = stdout only
    std::string format = "json";  // json | csv

    std::string serialize() const;  // flat key-value text
    static ExperimentConfig parse(const std::string& text);  // unknown keys rejected
    static ExperimentConfig load(const std::string& path);
};

struct ComparisonReport {
    Complex lhs{0.0};
    conj::ConjectureValue rhs;
    double relative_gap = 0.0;  // |lhs-rhs| / max(|rhs|, 1e-30)
    double runtime_seconds = 0.0;
    ExperimentConfig config;

    std::string to_json() const;  // numbers at 17 significant digits
    std::string to_csv() const;
    bool passes() const { return relative_gap < config.tolerance; }
};

ComparisonReport run_experiment(const ExperimentConfig& cfg);

// Deterministic fixed-chunk parallel map: results are combined in chunk
// order, so the sum is independent of the thread count.
std::vector<Complex> parallel_chunked(int chunks,
                                      const std::function<Complex(int)>& chunk_fn);

}  // namespace ratiolab::harness
