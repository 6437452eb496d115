#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqf/numtheory.hpp"

#include <cstdint>
#include <numeric>

using namespace sqf::numtheory;

namespace {

// Independent oracle: repeated-remainder Euclidean algorithm.
std::uint64_t euclid_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Independent oracle: quadratic residues of p by exhaustive enumeration.
int legendre_by_enumeration(std::uint64_t m, std::uint64_t p) {
    m %= p;
    if (m == 0) return 0;
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * x % p == m) return 1;
    return -1;
}

// Independent oracle: phi by direct coprime count.
std::uint64_t phi_by_count(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 1; m <= n; ++m)
        if (euclid_gcd(m, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("binary_gcd basics") {
    CHECK(binary_gcd<std::uint64_t>(0, 7) == 7);
    CHECK(binary_gcd<std::uint64_t>(7, 0) == 7);
    CHECK(binary_gcd<std::uint64_t>(0, 0) == 0);
    CHECK(binary_gcd<std::uint64_t>(12, 18) == 6);
    CHECK(binary_gcd(Natural{12}, Natural{18}) == 6);
    for (std::uint64_t m = 1; m < 45; ++m) CHECK(binary_gcd<std::uint64_t>(m, 45) == euclid_gcd(m, 45));
}

TEST_CASE("binary_gcd properties up to 10^4 (sampled grid) and exhaustive small") {
    for (std::uint64_t u = 0; u <= 300; ++u)
        for (std::uint64_t v = 0; v <= 300; ++v) {
            const std::uint64_t g = binary_gcd(u, v);
            CHECK(g == euclid_gcd(u, v));
            CHECK(g == binary_gcd(v, u));
            if (g != 0) {
                CHECK(u % g == 0);
                CHECK(v % g == 0);
            }
        }
    // scaling property gcd(ka, kb) = k gcd(a,b), sampled across the 10^4 range
    for (std::uint64_t k = 1; k <= 100; k += 7)
        for (std::uint64_t a = 1; a <= 100; a += 11)
            for (std::uint64_t b = 1; b <= 100; b += 13)
                CHECK(binary_gcd(k * a, k * b) == k * binary_gcd(a, b));
    // cpp_int route agrees with the u64 route well past 64-bit-safe sizes
    Natural big1 = Natural{1} << 90;
    Natural big2 = (Natural{1} << 75) * 3;
    CHECK(binary_gcd(big1, big2) == (Natural{1} << 75));
}

TEST_CASE("jacobi_binary basics") {
    for (std::uint64_t n = 3; n <= 99; n += 2) CHECK(jacobi_binary<std::uint64_t>(1, n) == 1);
    CHECK(jacobi_binary<std::uint64_t>(6, 15) == 0);
    CHECK(jacobi_binary<std::uint64_t>(2, 15) == 1);  // chi_3(2) * chi_5(2) = (-1)(-1)
    CHECK(jacobi_binary<std::uint64_t>(2, 9) == 1);
    CHECK(jacobi_binary(Natural{2}, Natural{15}) == 1);
    CHECK_THROWS_AS(jacobi_binary<std::uint64_t>(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_binary<std::uint64_t>(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_binary<std::uint64_t>(1, 1), std::invalid_argument);
}

TEST_CASE("jacobi_binary equals Legendre-product oracle, odd N <= 601 exhaustive") {
    for (std::uint64_t n = 3; n <= 601; n += 2)
        for (std::uint64_t m = 0; m < n; ++m)
            CHECK(jacobi_binary(m, n) == jacobi_oracle(Natural{m}, Natural{n}));
}

TEST_CASE("jacobi_binary periodicity and complete multiplicativity") {
    for (std::uint64_t n : {15u, 45u, 105u, 225u, 1001u}) {
        for (std::uint64_t m = 0; m < 2 * n; ++m)
            CHECK(jacobi_binary(m, n) == jacobi_binary(m % n, n));
        for (std::uint64_t a = 0; a < n; a += 3)
            for (std::uint64_t b = 0; b < n; b += 7)
                CHECK(jacobi_binary(a * b % n, n) == jacobi_binary(a, n) * jacobi_binary(b, n));
    }
}

TEST_CASE("legendre") {
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(4, 7) == 1);
    CHECK(legendre(2, 5) == -1);
    CHECK_THROWS_AS(legendre(2, 15), std::invalid_argument);
    CHECK_THROWS_AS(legendre(2, 2), std::invalid_argument);
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u})
        for (std::uint64_t m = 0; m < p; ++m)
            CHECK(legendre(m, p) == legendre_by_enumeration(m, p));
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(45) == 24);
    for (std::uint64_t n = 1; n <= 500; ++n) CHECK(euler_phi_u64(n) == phi_by_count(n));
    // phi(mn) * phi(g) = phi(m) phi(n) g  with g = gcd(m, n)
    for (std::uint64_t m = 1; m <= 60; ++m)
        for (std::uint64_t n = 1; n <= 60; ++n) {
            const std::uint64_t g = euclid_gcd(m, n);
            CHECK(euler_phi_u64(m * n) * euler_phi_u64(g) == euler_phi_u64(m) * euler_phi_u64(n) * g);
        }
}

TEST_CASE("squarefree_oracle") {
    CHECK(squarefree_oracle(1) == SquareFreeDecomposition{1, 1});
    CHECK(squarefree_oracle(45) == SquareFreeDecomposition{5, 3});
    CHECK(squarefree_oracle(105) == SquareFreeDecomposition{105, 1});
    CHECK(squarefree_oracle(3969) == SquareFreeDecomposition{1, 63});
    for (std::uint64_t n = 1; n <= 100000; n += 1) {
        const auto [r, s] = squarefree_oracle_u64(n);
        CHECK(r * s * s == n);
        // r admits no divisor p^2 > 1
        for (std::uint64_t p = 2; p * p <= r; ++p)
            if (r % (p * p) == 0) FAIL("square factor in r for n=", n);
    }
}

TEST_CASE("strip_even") {
    auto e8 = strip_even(8);
    CHECK(e8.odd_core == 1);
    CHECK(e8.two_exponent == 3);
    auto e45 = strip_even(45);
    CHECK(e45.odd_core == 45);
    CHECK(e45.two_exponent == 0);
    auto e12 = strip_even(12);
    CHECK(e12.odd_core == 3);
    CHECK(e12.two_exponent == 2);
}

TEST_CASE("divisors and primality helpers") {
    CHECK(divisors_u64(45) == std::vector<std::uint64_t>{1, 3, 5, 9, 15, 45});
    CHECK(divisors_u64(1) == std::vector<std::uint64_t>{1});
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(91));
    CHECK(is_prime(Natural{10007}));
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(3, 0, 7) == 1);
    CHECK(mod_pow(0, 5, 7) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::invalid_argument);
}
