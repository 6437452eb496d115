#pragma once

#include <complex>
#include <vector>

namespace sqf::dft {

using Complex = std::complex<double>;

// In-place unnormalized transform X_k = sum_m x_m e^{+2 pi i m k / N}.
// Arbitrary N (FFTW backend, Bluestein for awkward sizes). Thread-safe.
void transform_positive(std::vector<Complex>& data);

// Same with e^{-2 pi i m k / N}.
void transform_negative(std::vector<Complex>& data);

// O(N^2) direct evaluation of transform_positive, kept as an independent
// reference for tests.
std::vector<Complex> reference_positive(const std::vector<Complex>& data);

}  // namespace sqf::dft
