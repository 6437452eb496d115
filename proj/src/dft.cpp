#include "sqf/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sqf::dft {

namespace {

// FFTW's planner is not thread-safe; execution on distinct plans is.
std::mutex planner_mutex;

void run_fftw(std::vector<Complex>& data, int sign) {
    if (data.empty()) return;
    const int n = static_cast<int>(data.size());
    auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_1d(n, buffer, buffer, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("dft: fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace

void transform_positive(std::vector<Complex>& data) { run_fftw(data, FFTW_BACKWARD); }

void transform_negative(std::vector<Complex>& data) { run_fftw(data, FFTW_FORWARD); }

std::vector<Complex> reference_positive(const std::vector<Complex>& data) {
    const std::size_t n = data.size();
    std::vector<Complex> out(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            if (data[m] == Complex{0.0, 0.0}) continue;
            acc += data[m] * std::polar(1.0, step * static_cast<double>(m * k % n));
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace sqf::dft
