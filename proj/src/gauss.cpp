#include "sqf/gauss.hpp"

#include "sqf/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sqf::gauss {

namespace {

void require_odd_modulus(std::uint64_t modulus) {
    if (modulus < 3 || modulus % 2 == 0)
        throw std::invalid_argument("gauss: modulus must be odd and >= 3");
}

// e^{2 pi i t / N} for t in [0, N).
std::vector<Complex> root_table(std::uint64_t modulus) {
    std::vector<Complex> roots(modulus);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(modulus);
    for (std::uint64_t t = 0; t < modulus; ++t)
        roots[t] = std::polar(1.0, step * static_cast<double>(t));
    return roots;
}

Complex sum_for(std::uint64_t a, std::uint64_t modulus, const std::vector<std::int8_t>& chi,
                const std::vector<Complex>& roots) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t m = 0; m < modulus; ++m) {
        const int c = chi[m];
        if (c == 0) continue;
        const Complex w = roots[a * m % modulus];
        acc += c > 0 ? w : -w;
    }
    return acc;
}

}  // namespace

std::vector<std::int8_t> jacobi_row(std::uint64_t modulus) {
    require_odd_modulus(modulus);
    std::vector<std::int8_t> chi(modulus);
    for (std::uint64_t m = 0; m < modulus; ++m)
        chi[m] = static_cast<std::int8_t>(numtheory::jacobi_binary(m, modulus));
    return chi;
}

Complex gauss_sum(std::uint64_t a, std::uint64_t modulus) {
    require_odd_modulus(modulus);
    const auto chi = jacobi_row(modulus);
    const auto roots = root_table(modulus);
    return sum_for(a % modulus, modulus, chi, roots);
}

void GaussSumTable::write_csv(std::ostream& out) const {
    out << "a,re,im,gcd\n";
    for (std::uint64_t a = 0; a < values.size(); ++a) {
        const std::uint64_t g = a == 0 ? modulus : std::gcd(a, modulus);
        out << a << ',' << values[a].real() << ',' << values[a].imag() << ',' << g << '\n';
    }
}

GaussSumTable gauss_table(std::uint64_t modulus) {
    require_odd_modulus(modulus);
    if (modulus > kTableCap)
        throw std::invalid_argument("gauss_table: modulus exceeds the full-table cap");
    const auto chi = jacobi_row(modulus);
    const auto roots = root_table(modulus);
    GaussSumTable table{modulus, std::vector<Complex>(modulus)};
    for (std::uint64_t a = 0; a < modulus; ++a) table.values[a] = sum_for(a, modulus, chi, roots);
    return table;
}

Complex gauss_closed_form(std::uint64_t a, std::uint64_t modulus) {
    require_odd_modulus(modulus);
    const auto sf = numtheory::squarefree_oracle_u64(modulus);
    if (sf.s != 1) throw std::invalid_argument("gauss_closed_form: modulus is not square-free");
    if (std::gcd(a, modulus) != 1)
        throw std::invalid_argument("gauss_closed_form: a must be coprime to the modulus");
    const Complex eps = modulus % 4 == 1 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    const double chi = numtheory::jacobi_binary(a % modulus, modulus);
    return eps * chi * std::sqrt(static_cast<double>(modulus));
}

bool gauss_reduction_check(std::uint64_t t, std::uint64_t z, std::uint64_t modulus) {
    require_odd_modulus(modulus);
    if (z == 0 || modulus % (z * z) != 0)
        throw std::invalid_argument("gauss_reduction_check: z^2 must divide the modulus");
    const std::uint64_t x = modulus / (z * z);
    const Complex lhs = gauss_sum(t % modulus * (z * z) % modulus, modulus);
    const double ratio = static_cast<double>(numtheory::euler_phi_u64(modulus)) /
                         static_cast<double>(numtheory::euler_phi_u64(x));
    // x = 1 degenerates to the principal character mod 1, whose sum is 1.
    const Complex rhs = ratio * (x == 1 ? Complex{1.0, 0.0} : gauss_sum(t % x, x));
    return std::abs(lhs - rhs) <= kReductionTolerance;
}

DichotomyReport verify_dichotomy(std::uint64_t modulus) {
    require_odd_modulus(modulus);
    const auto chi = jacobi_row(modulus);
    const auto roots = root_table(modulus);
    const bool squarefree = numtheory::squarefree_oracle_u64(modulus).s == 1;
    const double sqrt_n = std::sqrt(static_cast<double>(modulus));

    DichotomyReport report;
    report.squarefree = squarefree;
    for (std::uint64_t a = 0; a < modulus; ++a) {
        const std::uint64_t g = a == 0 ? modulus : std::gcd(a, modulus);
        const Complex value = sum_for(a, modulus, chi, roots);
        if (squarefree) {
            if (g > 1) {
                report.max_zero_violation = std::max(report.max_zero_violation, std::abs(value));
            } else {
                report.max_modulus_error =
                    std::max(report.max_modulus_error, std::abs(std::abs(value) - sqrt_n));
            }
        } else if (g == 1) {
            report.max_zero_violation = std::max(report.max_zero_violation, std::abs(value));
        }
    }
    return report;
}

}  // namespace sqf::gauss
