#include "ratiolab/e11.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>

#include "ratiolab/characters.hpp"
#include "ratiolab/errors.hpp"

namespace ratiolab {

int64_t CoefficientTable::a(int64_t n) const {
    if (n < 1 || n > max_index_) throw MissingCoefficients("CoefficientTable: index out of range");
    return a_[n];
}

double CoefficientTable::lambda(int64_t n) const {
    return static_cast<double>(a(n)) / std::sqrt(static_cast<double>(n));
}

double CoefficientTable::lambda_prime_power(int64_t p, int e) const {
    if (e == 0) return 1.0;
    double lp = lambda(p);
    double chi0 = (p == 11) ? 0.0 : 1.0;
    double prev = 1.0, cur = lp;
    for (int k = 2; k <= e; ++k) {
        double next = lp * cur - chi0 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double CoefficientTable::mu_e(int64_t n) const {
    if (n < 1) throw Error("mu_e: n >= 1 required");
    double value = 1.0;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 2) return 0.0;
        value *= (e == 1) ? -lambda(p) : (p == 11 ? 0.0 : 1.0);
        if (value == 0.0) return 0.0;
    }
    if (n > 1) value *= -lambda(n);
    return value;
}

namespace {

struct SparseSeries {
    std::vector<int64_t> exponent;
    std::vector<int> sign;
};

// prod (1-q^{s n}) = sum_k (-1)^k q^{s k(3k-1)/2}  (pentagonal numbers)
SparseSeries pentagonal(int64_t scale, int64_t max_exp) {
    SparseSeries series;
    series.exponent.push_back(0);
    series.sign.push_back(1);
    for (int64_t k = 1;; ++k) {
        int64_t g1 = scale * k * (3 * k - 1) / 2;
        int64_t g2 = scale * k * (3 * k + 1) / 2;
        if (g1 > max_exp && g2 > max_exp) break;
        int s = (k % 2) ? -1 : 1;
        if (g1 <= max_exp) {
            series.exponent.push_back(g1);
            series.sign.push_back(s);
        }
        if (g2 <= max_exp) {
            series.exponent.push_back(g2);
            series.sign.push_back(s);
        }
    }
    return series;
}

void multiply_sparse(std::vector<int64_t>& dense, const SparseSeries& s) {
    std::vector<int64_t> out(dense.size(), 0);
    const int64_t guard = int64_t(1) << 60;
    for (size_t i = 0; i < s.exponent.size(); ++i) {
        int64_t e = s.exponent[i];
        int64_t sg = s.sign[i];
        for (int64_t j = 0; j + e < static_cast<int64_t>(dense.size()); ++j) {
            out[j + e] += sg * dense[j];
            if (out[j + e] > guard || out[j + e] < -guard)
                throw Overflow("e11 eta expansion: coefficient overflow");
        }
    }
    dense.swap(out);
}

}  // namespace

CoefficientTable e11_coefficients_eta(int64_t max_index) {
    if (max_index < 1 || max_index > 1000000)
        throw Error("e11_coefficients_eta: max_index in [1, 1e6]");
    int64_t len = max_index;  // powers of q^0 .. q^{max_index-1} before the q shift
    SparseSeries p1 = pentagonal(1, len - 1);
    std::vector<int64_t> dense(len, 0);
    // dense = p1^2 by sparse x sparse
    for (size_t i = 0; i < p1.exponent.size(); ++i)
        for (size_t j = 0; j < p1.exponent.size(); ++j) {
            int64_t e = p1.exponent[i] + p1.exponent[j];
            if (e < len) dense[e] += int64_t(p1.sign[i]) * p1.sign[j];
        }
    SparseSeries p11 = pentagonal(11, len - 1);
    multiply_sparse(dense, p11);
    multiply_sparse(dense, p11);
    std::vector<int64_t> a(max_index + 1, 0);
    for (int64_t n = 1; n <= max_index; ++n) a[n] = dense[n - 1];
    return CoefficientTable(std::move(a), max_index);
}

int64_t e11_ap_point_count(int64_t p) {
    if (p < 2 || p > 100000) throw Error("e11_ap_point_count: p in [2, 1e5]");
    if (p == 2) {
        // integral model y^2 + y = x^3 - x^2 - 10x - 20 over F_2
        int64_t count = 0;
        for (int64_t x = 0; x < 2; ++x)
            for (int64_t y = 0; y < 2; ++y) {
                int64_t lhs = (y * y + y) % 2;
                int64_t rhs = ((x * x * x - x * x - 10 * x - 20) % 2 + 2) % 2;
                if (lhs == rhs) ++count;
            }
        return 2 - count;
    }
    // odd p: N_p = p + sum_x (f(x)/p) with f(x) = 4x^3 - 4x^2 - 40x - 79
    int64_t sum = 0;
    for (int64_t x = 0; x < p; ++x) {
        int64_t f = ((4 * x % p) * x % p) * x % p;
        f = (f - 4 * x % p * x % p + p * p) % p;
        f = (f - 40 * x % p + p * p) % p;
        f = (f - 79 % p + p) % p;
        sum += kronecker_symbol(f, p);
    }
    return -sum;
}

int twist_sign(int64_t d) {
    if (d % 11 == 0) throw BadTwist("twist_sign: 11 | d");
    if (!is_fundamental_discriminant(d)) throw NotFundamental("twist_sign: d not fundamental");
    return kronecker_chi(d, -11);
}

namespace {

constexpr char kCacheMagic[8] = {'R', 'L', 'E', '1', '1', 'C', '1', '\0'};

uint64_t fnv1a(const int64_t* data, size_t count) {
    uint64_t h = 1469598103934665603ULL;
    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(data);
    for (size_t i = 0; i < count * sizeof(int64_t); ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};

}  // namespace

void save_coefficient_cache(const CoefficientTable& table, const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> f(std::fopen(path.c_str(), "wb"));
    if (!f) throw Error("save_coefficient_cache: cannot open " + path);
    int64_t n = table.max_index();
    std::vector<int64_t> a(n + 1, 0);
    for (int64_t i = 1; i <= n; ++i) a[i] = table.a(i);
    uint64_t checksum = fnv1a(a.data(), a.size());
    if (std::fwrite(kCacheMagic, 1, 8, f.get()) != 8 ||
        std::fwrite(&n, sizeof(n), 1, f.get()) != 1 ||
        std::fwrite(&checksum, sizeof(checksum), 1, f.get()) != 1 ||
        std::fwrite(a.data(), sizeof(int64_t), a.size(), f.get()) != a.size())
        throw Error("save_coefficient_cache: short write");
}

CoefficientTable load_coefficient_cache(const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> f(std::fopen(path.c_str(), "rb"));
    if (!f) throw Error("load_coefficient_cache: cannot open " + path);
    char magic[8];
    int64_t n = 0;
    uint64_t checksum = 0;
    if (std::fread(magic, 1, 8, f.get()) != 8 || std::memcmp(magic, kCacheMagic, 8) != 0)
        throw Error("load_coefficient_cache: bad magic");
    if (std::fread(&n, sizeof(n), 1, f.get()) != 1 || n < 1 || n > 1000000)
        throw Error("load_coefficient_cache: bad header");
    if (std::fread(&checksum, sizeof(checksum), 1, f.get()) != 1)
        throw Error("load_coefficient_cache: bad header");
    std::vector<int64_t> a(n + 1, 0);
    if (std::fread(a.data(), sizeof(int64_t), a.size(), f.get()) != a.size())
        throw Error("load_coefficient_cache: short read");
    if (fnv1a(a.data(), a.size()) != checksum)
        throw Error("load_coefficient_cache: checksum mismatch");
    return CoefficientTable(std::move(a), n);
}

}  // namespace ratiolab
