#include "sqf/numtheory.hpp"

#include <algorithm>

namespace sqf::numtheory {

Natural mod_pow(Natural base, Natural exponent, const Natural& modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: zero modulus");
    Natural result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (detail::low_bits(exponent, 1)) result = result * base % modulus;
        base = base * base % modulus;
        exponent >>= 1;
    }
    return result;
}

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (detail::low_bits(n, 1) == 0) return false;
    for (Natural d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<Natural, unsigned>> factorize(const Natural& n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be >= 1");
    std::vector<std::pair<Natural, unsigned>> factors;
    Natural rest = n;
    auto divide_out = [&](const Natural& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    };
    divide_out(2);
    for (Natural d = 3; d * d <= rest; d += 2) divide_out(d);
    if (rest > 1) factors.emplace_back(rest, 1);
    return factors;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: argument must be >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    auto divide_out = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    };
    divide_out(2);
    for (std::uint64_t d = 3; d * d <= n; d += 2) divide_out(d);
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

int legendre(const Natural& m, const Natural& p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    Natural a = m % p;
    if (a == 0) return 0;
    const Natural e = mod_pow(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int jacobi_oracle(const Natural& m, const Natural& modulus) {
    if (modulus < 3 || detail::low_bits(modulus, 1) == 0)
        throw std::invalid_argument("jacobi_oracle: modulus must be odd and >= 3");
    int result = 1;
    for (const auto& [p, e] : factorize(modulus)) {
        const int chi = legendre(m, p);
        if (chi == 0) return 0;
        if (chi == -1 && (e & 1)) result = -result;
    }
    return result;
}

Natural euler_phi(const Natural& n) {
    if (n == 0) throw std::invalid_argument("euler_phi: argument must be >= 1");
    Natural phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        Natural pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi_u64: argument must be >= 1");
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize_u64(n)) {
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

SquareFreeDecomposition squarefree_oracle(const Natural& n) {
    if (n == 0) throw std::invalid_argument("squarefree_oracle: argument must be >= 1");
    SquareFreeDecomposition out{1, 1};
    for (const auto& [p, e] : factorize(n)) {
        if (e & 1) out.r *= p;
        for (unsigned i = 0; i < e / 2; ++i) out.s *= p;
    }
    return out;
}

SquareFree64 squarefree_oracle_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("squarefree_oracle_u64: argument must be >= 1");
    SquareFree64 out{1, 1};
    for (const auto& [p, e] : factorize_u64(n)) {
        if (e & 1) out.r *= p;
        for (unsigned i = 0; i < e / 2; ++i) out.s *= p;
    }
    return out;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize_u64(n)) {
        const std::size_t count = divs.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

EvenSplit strip_even(const Natural& n) {
    if (n == 0) return {0, 0};
    EvenSplit out{n, 0};
    while (detail::low_bits(out.odd_core, 1) == 0) {
        out.odd_core >>= 1;
        ++out.two_exponent;
    }
    return out;
}

}  // namespace sqf::numtheory
