#pragma once

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace sqf::qsim {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
// Full exhaustive distributions are capped at desk scale.
inline constexpr std::uint64_t kExhaustiveCap = 10000;
// Hard memory guard for sampled runs (dense DFT buffer of this length).
inline constexpr std::uint64_t kSimulationCap = 1u << 21;

// One basis branch |basis>_A |aux>_B with its amplitude.
struct Branch {
    std::uint64_t basis;
    std::uint64_t aux;
    Complex amp;
};

// Sparse statevector over the Z_N basis; branches sorted by basis index.
struct Statevector {
    std::uint64_t dimension = 0;
    std::vector<Branch> branches;

    double norm_squared() const;
};

// Deterministic 64-bit stream (splitmix64); one stream per seeded run.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform01();

  private:
    std::uint64_t state_;
};

struct Outcome {
    std::uint64_t value = 0;
    double prob = 0.0;
    // Exact rational probability when available (count/total), else total = 0.
    std::uint64_t count = 0;
    std::uint64_t total = 0;
};

struct MeasurementDistribution {
    std::vector<Outcome> outcomes;  // sorted by value

    double total_probability() const;
    // Inverse-CDF draw over the sorted outcome list; bit-reproducible.
    std::uint64_t sample(Rng& rng) const;
    void write_csv(std::ostream& out) const;
    nlohmann::json to_json() const;
};

// |phi_0> = (N-1)^{-1/2} sum_{m=1}^{N-1} |m>_A |0>_B.
Statevector prepare_uniform(std::uint64_t modulus);

// U1: |m>|0> -> |m>|gcd(m, N)>.
Statevector apply_u1(Statevector state, std::uint64_t modulus);

// Distribution of register B. Collapse with collapse_m1.
MeasurementDistribution measure_m1(const Statevector& state, std::uint64_t modulus);
Statevector collapse_m1(Statevector state, std::uint64_t outcome);

// U2 by phase kickback: compute chi_N(m) into B (-1 encoded as N-1), apply the
// conditional phase e^{i pi (chi(m)-1)/2} = chi(m), uncompute B back to 1.
// The three steps are appended to *log when given. Rejects non-coprime support.
Statevector apply_u2(Statevector state, std::uint64_t modulus, nlohmann::json* log = nullptr);

// Order-N QFT on register A: amp'(k) = N^{-1/2} sum_m amp(m) e^{2 pi i mk/N}.
Statevector apply_qft(const Statevector& state, std::uint64_t modulus);
Statevector apply_qft_inverse(const Statevector& state, std::uint64_t modulus);

MeasurementDistribution measure_m2(const Statevector& state, std::uint64_t modulus);

enum class OutcomeKind { FactorAtM1, FactorAtM2, SquareFreeCertificate };
const char* to_string(OutcomeKind kind);

struct OmegaOutcome {
    OutcomeKind kind;
    std::uint64_t factor = 0;    // > 1 and divides N for the factor kinds
    std::uint64_t m2_value = 0;  // raw k0 for M2 outcomes
};

struct WeightedOutcome {
    OmegaOutcome outcome;
    double prob = 0.0;
};

struct OmegaOutcomeSet {
    std::vector<WeightedOutcome> outcomes;
};

// One-shot runner of the subroutine (prepare, U1, M1, U2, QFT, M2) for a fixed
// odd modulus >= 3. Caches the measurement distributions so repeated seeded
// samples and the recursion above it stay cheap.
class OmegaEngine {
  public:
    explicit OmegaEngine(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    const MeasurementDistribution& m1_distribution();
    // Conditional on M1 = 1.
    const MeasurementDistribution& m2_distribution();

    OmegaOutcome sample(std::uint64_t seed, nlohmann::json* trace = nullptr);
    OmegaOutcomeSet exhaustive();

  private:
    std::uint64_t modulus_;
    std::optional<MeasurementDistribution> m1_;
    std::optional<MeasurementDistribution> m2_;
};

OmegaOutcome omega_sample(std::uint64_t modulus, std::uint64_t seed,
                          nlohmann::json* trace = nullptr);
OmegaOutcomeSet omega_exhaustive(std::uint64_t modulus);

}  // namespace sqf::qsim
