#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sqf::gauss {

using Complex = std::complex<double>;

// Absolute comparison tolerance for single Gauss sums at desk scale.
inline constexpr double kTolerance = 1e-9;
// Looser tolerance for ratio identities amplified by phi(N)/phi(x).
inline constexpr double kReductionTolerance = 1e-6;
// Full-table operations are capped here; direct summation is O(N^2) per table.
inline constexpr std::uint64_t kTableCap = 10000;

// chi_N(m) for m in [0, N), computed with the binary Jacobi algorithm.
std::vector<std::int8_t> jacobi_row(std::uint64_t modulus);

// G(a, chi_N) = sum_m chi_N(m) e^{2 pi i a m / N} by direct summation.
Complex gauss_sum(std::uint64_t a, std::uint64_t modulus);

struct GaussSumTable {
    std::uint64_t modulus = 0;
    std::vector<Complex> values;  // a -> G(a, chi_N)

    // Columns: a, re, im, gcd(a, N).
    void write_csv(std::ostream& out) const;
};

// All G(a, chi_N) for a in [0, N) by direct summation (O(N^2), N <= kTableCap).
GaussSumTable gauss_table(std::uint64_t modulus);

// eps_N * chi_N(a) * sqrt(N) for odd square-free N and gcd(a, N) = 1, with
// eps_N = 1 for N = 1 mod 4 and i for N = 3 mod 4. The value of eps_N is
// validated numerically against direct summation before anything trusts it.
Complex gauss_closed_form(std::uint64_t a, std::uint64_t modulus);

// Checks G(t z^2 mod N, chi_N) = (phi(N)/phi(x)) G(t mod x, chi_x) with
// x = N / z^2, within kReductionTolerance. Requires z^2 | N.
bool gauss_reduction_check(std::uint64_t t, std::uint64_t z, std::uint64_t modulus);

struct DichotomyReport {
    bool squarefree = false;
    // Largest |G(a, chi)| over the a-classes where the dichotomy demands zero.
    double max_zero_violation = 0.0;
    // Square-free N only: largest | |G(a, chi)| - sqrt(N) | over coprime a.
    double max_modulus_error = 0.0;

    double max_violation() const {
        return max_zero_violation > max_modulus_error ? max_zero_violation : max_modulus_error;
    }
};

// Exhaustive a-scan of the square-freeness dichotomy for odd N >= 3.
DichotomyReport verify_dichotomy(std::uint64_t modulus);

}  // namespace sqf::gauss
