#include "ratiolab/primes.hpp"

#include <stdexcept>

#include "ratiolab/errors.hpp"

namespace ratiolab {

namespace {

std::vector<int64_t> sieve_eratosthenes(int64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<int64_t> primes;
    for (int64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (int64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return primes;
}

std::vector<int64_t> sieve_sundaram(int64_t n) {
    // odd primes via i + j + 2ij exclusion, then prepend 2
    int64_t k = (n - 1) / 2;
    std::vector<bool> marked(k + 1, false);
    for (int64_t i = 1; i <= k; ++i)
        for (int64_t j = i; i + j + 2 * i * j <= k; ++j) marked[i + j + 2 * i * j] = true;
    std::vector<int64_t> primes;
    if (n >= 2) primes.push_back(2);
    for (int64_t i = 1; i <= k; ++i)
        if (!marked[i]) primes.push_back(2 * i + 1);
    return primes;
}

}  // namespace

PrimeTable PrimeTable::build(int64_t cutoff) {
    if (cutoff < 2) throw Error("PrimeTable: cutoff < 2");
    PrimeTable table;
    table.cutoff = cutoff;
    table.primes = sieve_eratosthenes(cutoff);
    if (table.primes != sieve_sundaram(cutoff))
        throw Error("PrimeTable: independent sieves disagree");
    return table;
}

int moebius(int64_t n) {
    if (n < 1) throw Error("moebius: n >= 1 required");
    int factors = 0;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return (factors % 2) ? -1 : 1;
}

}  // namespace ratiolab
