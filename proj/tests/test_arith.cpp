#include <cmath>
#include <cstdio>
#include <random>

#include "doctest.h"
#include "ratiolab/characters.hpp"
#include "ratiolab/e11.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/primes.hpp"

using namespace ratiolab;

TEST_CASE("moebius basics") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(7) == -1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("prime table agrees with trial division") {
    PrimeTable t = PrimeTable::build(1000);
    CHECK(t.primes.size() == 168);
    CHECK(t.primes.front() == 2);
    CHECK(t.primes.back() == 997);
}

TEST_CASE("fundamental discriminants: examples and sequences") {
    CHECK(is_fundamental_discriminant(5));
    CHECK(is_fundamental_discriminant(12));
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(-7));
    CHECK(is_fundamental_discriminant(-8));
    CHECK(!is_fundamental_discriminant(9));
    auto pos = fundamental_discriminants(13, true);
    CHECK(pos.values == std::vector<int64_t>({1, 5, 8, 12, 13}));
    auto neg = fundamental_discriminants(8, false);
    CHECK(neg.values == std::vector<int64_t>({-8, -7, -4, -3}));
}

TEST_CASE("fundamental discriminant count matches the brute filter at 1e4") {
    auto list = fundamental_discriminants(10000, true);
    int64_t brute = 0;
    for (int64_t d = 1; d <= 10000; ++d)
        if (is_fundamental_discriminant(d)) ++brute;
    CHECK(list.count == brute);
}

TEST_CASE("kronecker chi values from the defining tables") {
    CHECK(kronecker_chi(-4, 3) == -1);
    CHECK(kronecker_chi(-4, 1) == 1);
    CHECK(kronecker_chi(-4, 2) == 0);
    CHECK(kronecker_chi(8, 7) == 1);
    CHECK(kronecker_chi(8, 3) == -1);
    CHECK(kronecker_chi(-8, 3) == 1);
    CHECK_THROWS_AS(kronecker_chi(9, 2), NotFundamental);
}

TEST_CASE("kronecker chi is completely multiplicative") {
    std::mt19937_64 rng(3);
    auto fundamentals = fundamental_discriminants(60, true).values;
    auto negs = fundamental_discriminants(60, false).values;
    fundamentals.insert(fundamentals.end(), negs.begin(), negs.end());
    std::uniform_int_distribution<int64_t> pick(0, fundamentals.size() - 1);
    std::uniform_int_distribution<int64_t> num(1, 5000);
    for (int i = 0; i < 200; ++i) {
        int64_t d = fundamentals[pick(rng)];
        int64_t m = num(rng), n = num(rng);
        CHECK(kronecker_chi(d, m * n) == kronecker_chi(d, m) * kronecker_chi(d, n));
    }
}

TEST_CASE("kronecker chi periodicity and parity") {
    for (int64_t d : {5, 8, 13, -3, -4, -8, -20}) {
        int64_t period = std::abs(d);
        for (int64_t n = -30; n <= 30; ++n)
            CHECK(kronecker_chi(d, n + period) == kronecker_chi(d, n));
        CHECK(kronecker_chi(d, -1) == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("chi_d construction from prime discriminants matches for |d| <= 50") {
    // product construction: chi_d = chi_{d_even} * prod_{p | odd(d)} chi_{p*},
    // p* = (-1)^{(p-1)/2} p and d_even in {1, -4, 8, -8}
    for (int64_t d = -50; d <= 50; ++d) {
        if (d == 0 || !is_fundamental_discriminant(d)) continue;
        std::vector<int64_t> parts;
        int64_t odd = std::abs(d);
        while (odd % 2 == 0) odd /= 2;
        int64_t pstar_prod = 1;
        for (int64_t p = 3; p <= odd; p += 2)
            if (odd % p == 0) {
                int64_t pstar = (p % 4 == 1) ? p : -p;
                parts.push_back(pstar);
                pstar_prod *= pstar;
                odd /= p;
            }
        int64_t d_even = d / pstar_prod;
        REQUIRE((d_even == 1 || d_even == -4 || d_even == 8 || d_even == -8));
        if (d_even != 1) parts.push_back(d_even);
        for (int64_t n = 1; n <= 40; ++n) {
            int expected = 1;
            for (int64_t q : parts) expected *= kronecker_symbol(q, n);
            CHECK(kronecker_chi(d, n) == expected);
        }
    }
}

TEST_CASE("harmonic detector values") {
    CHECK(harmonic_detector_delta(4) == doctest::Approx(2.0 / 3.0));
    CHECK(harmonic_detector_delta(2) == 0.0);
    CHECK(harmonic_detector_delta(9) == doctest::Approx(0.75));
    CHECK(harmonic_detector_delta(36) == doctest::Approx(0.5));
    CHECK(harmonic_detector_delta(1) == doctest::Approx(1.0));
}

TEST_CASE("character average over the family approaches the detector") {
    auto list = fundamental_discriminants(100000, true);
    for (int64_t n : {4, 9}) {
        double acc = 0.0;
        for (int64_t d : list.values) acc += kronecker_chi(d, n);
        acc /= static_cast<double>(list.count);
        CHECK(std::abs(acc - harmonic_detector_delta(n)) <
              0.02 * harmonic_detector_delta(n));
    }
    // non-square: average tends to zero
    double acc2 = 0.0;
    for (int64_t d : list.values) acc2 += kronecker_chi(d, 2);
    CHECK(std::abs(acc2 / static_cast<double>(list.count)) < 0.02);
}

TEST_CASE("e11 eta expansion reproduces the tabulated head") {
    CoefficientTable t = e11_coefficients_eta(64);
    CHECK(t.a(1) == 1);
    CHECK(t.a(2) == -2);
    CHECK(t.a(3) == -1);
    CHECK(t.a(4) == 2);
    CHECK(t.a(5) == 1);
    CHECK(t.a(11) == 1);
    CHECK(t.lambda(11) == doctest::Approx(1.0 / std::sqrt(11.0)));
}

TEST_CASE("eta expansion matches point counts for p < 100") {
    CoefficientTable t = e11_coefficients_eta(100);
    for (int64_t p : PrimeTable::build(100).primes) CHECK(t.a(p) == e11_ap_point_count(p));
}

TEST_CASE("Hecke relations with the level character, integer exact") {
    CoefficientTable t = e11_coefficients_eta(2501);
    for (int64_t m = 1; m <= 50; ++m)
        for (int64_t n = 1; n <= 50; ++n) {
            int64_t rhs = 0;
            for (int64_t e = 1; e <= std::min(m, n); ++e)
                if (m % e == 0 && n % e == 0 && e % 11 != 0) rhs += e * t.a(m * n / (e * e));
            CHECK(t.a(m) * t.a(n) == rhs);
        }
}

TEST_CASE("lambda prime powers extend the table consistently") {
    CoefficientTable t = e11_coefficients_eta(130);
    CHECK(t.lambda_prime_power(2, 1) == doctest::Approx(t.lambda(2)));
    CHECK(t.lambda_prime_power(2, 3) == doctest::Approx(t.lambda(8)));
    CHECK(t.lambda_prime_power(3, 4) == doctest::Approx(t.lambda(81)));
    CHECK(t.lambda_prime_power(11, 2) == doctest::Approx(t.lambda(121)));
    CHECK(t.lambda_prime_power(11, 2) == doctest::Approx(1.0 / 11.0));
}

TEST_CASE("mu_E support and values") {
    CoefficientTable t = e11_coefficients_eta(130);
    CHECK(t.mu_e(1) == doctest::Approx(1.0));
    CHECK(t.mu_e(2) == doctest::Approx(-t.lambda(2)));
    CHECK(t.mu_e(4) == doctest::Approx(1.0));
    CHECK(t.mu_e(8) == doctest::Approx(0.0));
    CHECK(t.mu_e(121) == doctest::Approx(0.0));
    CHECK(t.mu_e(6) == doctest::Approx(t.lambda(2) * t.lambda(3)));
}

TEST_CASE("twist sign: kronecker identity and the negative-d residue table") {
    std::mt19937_64 rng(17);
    auto neg = fundamental_discriminants(4000, false).values;
    auto pos = fundamental_discriminants(4000, true).values;
    std::vector<int64_t> all(neg);
    all.insert(all.end(), pos.begin(), pos.end());
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    int checked = 0;
    while (checked < 100) {
        int64_t d = all[pick(rng)];
        if (d % 11 == 0) continue;
        CHECK(twist_sign(d) == kronecker_chi(d, -11));
        ++checked;
    }
    // for d < 0 the sign depends only on d mod 11
    for (int64_t d : neg) {
        if (d % 11 == 0) continue;
        int64_t r = ((d % 11) + 11) % 11;
        bool plus = (r == 2 || r == 6 || r == 7 || r == 8 || r == 10);
        CHECK(twist_sign(d) == (plus ? 1 : -1));
    }
    CHECK_THROWS_AS(twist_sign(33), BadTwist);
}

TEST_CASE("coefficient cache round trip") {
    CoefficientTable t = e11_coefficients_eta(500);
    std::string path = "e11_cache_test.bin";
    save_coefficient_cache(t, path);
    CoefficientTable back = load_coefficient_cache(path);
    CHECK(back.max_index() == 500);
    for (int64_t n = 1; n <= 500; ++n) CHECK(back.a(n) == t.a(n));
    std::remove(path.c_str());
}

TEST_CASE("Deligne bound below 1e4") {
    CoefficientTable t = e11_coefficients_eta(10000);
    for (int64_t p : PrimeTable::build(10000).primes) {
        if (p == 11) continue;
        CHECK(std::abs(t.lambda(p)) < 2.0);
    }
}
