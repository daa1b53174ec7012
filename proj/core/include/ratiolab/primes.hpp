#pragma once

#include <cstdint>
#include <vector>

namespace ratiolab {

struct PrimeTable {
    std::vector<int64_t> primes;  // ascending, complete up to cutoff
    int64_t cutoff = 0;

    // Sieve of Eratosthenes, cross-checked against an independent sieve of
    // Sundaram at construction.
    static PrimeTable build(int64_t cutoff);
};

int moebius(int64_t n);

}  // namespace ratiolab
