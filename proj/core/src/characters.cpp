#include "ratiolab/characters.hpp"
#include <algorithm>

#include <cmath>

#include "ratiolab/errors.hpp"

namespace ratiolab {

int kronecker_symbol(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        // both odd: quadratic reciprocity
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        int64_t t = n % a;
        n = a;
        a = t;
    }
    return (n == 1) ? result : 0;
}

namespace {

bool squarefree(int64_t n) {
    if (n < 0) n = -n;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

bool is_fundamental_discriminant(int64_t d) {
    if (d == 0) throw Error("is_fundamental_discriminant: d != 0 required");
    int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return squarefree(d);
    if (r4 == 0) {
        int64_t m = d / 4;
        int64_t m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && squarefree(m);
    }
    return false;
}

DiscriminantList fundamental_discriminants(int64_t X, bool positive) {
    DiscriminantList out;
    if (X < 1) return out;
    // squarefree sieve on |m| <= X
    std::vector<bool> sqf(X + 1, true);
    for (int64_t p = 2; p * p <= X; ++p)
        for (int64_t q = p * p; q <= X; q += p * p) sqf[q] = false;
    for (int64_t m = 1; m <= X; ++m) {
        int64_t d = positive ? m : -m;
        int64_t r4 = ((d % 4) + 4) % 4;
        bool fund = false;
        if (r4 == 1) fund = sqf[m];
        else if (r4 == 0) {
            int64_t h = d / 4;
            int64_t h4 = ((h % 4) + 4) % 4;
            fund = (h4 == 2 || h4 == 3) && sqf[m / 4];
        }
        if (fund) out.values.push_back(d);
    }
    if (!positive) std::reverse(out.values.begin(), out.values.end());
    out.count = static_cast<int64_t>(out.values.size());
    return out;
}

int kronecker_chi(int64_t d, int64_t n) {
    if (!is_fundamental_discriminant(d)) throw NotFundamental("kronecker_chi: d not fundamental");
    return kronecker_symbol(d, n);
}

double harmonic_detector_delta(int64_t n) {
    if (n < 1) throw Error("harmonic_detector_delta: n >= 1 required");
    int64_t r = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return 0.0;
    double value = 1.0;
    int64_t m = n;
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        value /= 1.0 + 1.0 / static_cast<double>(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) value /= 1.0 + 1.0 / static_cast<double>(m);
    return value;
}

}  // namespace ratiolab
