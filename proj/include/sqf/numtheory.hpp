#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqf::numtheory {

// Exact non-negative integer. All arithmetic in this module is integral;
// callers keep values >= 0.
using Natural = boost::multiprecision::cpp_int;

// N = r * s^2 with r square-free. The decomposition is unique.
struct SquareFreeDecomposition {
    Natural r;
    Natural s;
    bool operator==(const SquareFreeDecomposition&) const = default;
};

struct SquareFree64 {
    std::uint64_t r;
    std::uint64_t s;
    bool operator==(const SquareFree64&) const = default;
};

// N = odd_core * 2^two_exponent with odd_core odd (odd_core = 0 only for N = 0).
struct EvenSplit {
    Natural odd_core;
    unsigned two_exponent;
};

namespace detail {

inline unsigned bit_length(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x)); }

inline unsigned bit_length(const Natural& x) {
    return x == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
}

inline unsigned low_bits(std::uint64_t x, unsigned n) {
    return static_cast<unsigned>(x & ((std::uint64_t{1} << n) - 1));
}

inline unsigned low_bits(const Natural& x, unsigned n) {
    return static_cast<unsigned>(x & ((Natural{1} << n) - 1));
}

}  // namespace detail

// Binary (shift-and-subtract) GCD. gcd(u, 0) = u, gcd(0, 0) = 0.
//
// The loop is a fixed sequence of combined rounds (halve the even operand(s),
// count common halvings, and on two odd operands replace the larger by half
// the difference), bounded by 2*(bitlen(u) + bitlen(v)) rounds. This is the
// same round structure the reversible circuit unrolls, so the classical and
// circuit control flows match step for step.
template <class Int>
Int binary_gcd(Int u, Int v) {
    if (u == 0) std::swap(u, v);
    const unsigned bound = 2 * (detail::bit_length(u) + detail::bit_length(v));
    unsigned k = 0;
    for (unsigned i = 0; i < bound && v != 0; ++i) {
        const bool u_even = (detail::low_bits(u, 1) == 0);
        const bool v_even = (detail::low_bits(v, 1) == 0);
        if (u_even) u >>= 1;
        if (v_even) v >>= 1;
        if (u_even && v_even) ++k;
        if (!u_even && !v_even) {
            if (v < u) std::swap(u, v);
            v -= u;
            v >>= 1;
        }
    }
    assert(v == 0);
    return u << k;
}

// Binary Jacobi symbol chi_N(m) for odd modulus N >= 3. Never factors N.
// Returns 0 exactly when gcd(m, N) > 1. Same bounded round structure as the
// reversible Jacobi circuit: strip one factor of two per round with the
// mod-8 rule, or swap-with-reciprocity and fold one halving into the
// subtraction step.
template <class Int>
int jacobi_binary(Int m, Int modulus) {
    if (modulus < 3 || detail::low_bits(modulus, 1) == 0)
        throw std::invalid_argument("jacobi_binary: modulus must be odd and >= 3");
    if (m == 0) return 0;
    Int u = std::move(m);
    Int v = std::move(modulus);
    int sign = 1;
    const unsigned bound = 2 * (detail::bit_length(u) + detail::bit_length(v));
    for (unsigned i = 0; i < bound && u != 0; ++i) {
        if (detail::low_bits(u, 1) == 0) {
            u >>= 1;
            const unsigned v8 = detail::low_bits(v, 3);
            if (v8 == 3 || v8 == 5) sign = -sign;
        } else {
            const bool swap = u < v;
            if (swap && detail::low_bits(u, 2) == 3 && detail::low_bits(v, 2) == 3) sign = -sign;
            if (swap) std::swap(u, v);
            u -= v;
            u >>= 1;
            const unsigned v8 = detail::low_bits(v, 3);
            if (v8 == 3 || v8 == 5) sign = -sign;
        }
    }
    assert(u == 0);
    return v == 1 ? sign : 0;
}

Natural mod_pow(Natural base, Natural exponent, const Natural& modulus);

// Legendre symbol via Euler's criterion; p must be an odd prime (checked by
// trial division, so this stays on the oracle path).
int legendre(const Natural& m, const Natural& p);

// --- oracle path -----------------------------------------------------------
// These may factor their argument by trial division. They exist to verify the
// algorithm-under-test path (binary_gcd / jacobi_binary), which never factors.

std::vector<std::pair<Natural, unsigned>> factorize(const Natural& n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

// chi_N(m) as the product of Legendre symbols over N's prime factorization
// with multiplicity. Test oracle for jacobi_binary only.
int jacobi_oracle(const Natural& m, const Natural& modulus);

Natural euler_phi(const Natural& n);
std::uint64_t euler_phi_u64(std::uint64_t n);

SquareFreeDecomposition squarefree_oracle(const Natural& n);
SquareFree64 squarefree_oracle_u64(std::uint64_t n);

// All divisors of n, sorted ascending.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

// ---------------------------------------------------------------------------

EvenSplit strip_even(const Natural& n);

}  // namespace sqf::numtheory
