#pragma once

#include <cstdint>
#include <vector>

namespace ratiolab {

// Kronecker symbol (a/n), defined for all integers.
int kronecker_symbol(int64_t a, int64_t n);

bool is_fundamental_discriminant(int64_t d);

struct DiscriminantList {
    std::vector<int64_t> values;  // ascending
    int64_t count = 0;            // the family normalizer X*
};

// Fundamental discriminants with 0 < d <= X (positive) or 0 < -d <= X.
DiscriminantList fundamental_discriminants(int64_t X, bool positive);

// chi_d(n) = (d/n) for a fundamental discriminant d; throws NotFundamental.
int kronecker_chi(int64_t d, int64_t n);

// prod_{p|n} (1+1/p)^{-1} if n is a perfect square, else 0.
double harmonic_detector_delta(int64_t n);

}  // namespace ratiolab
