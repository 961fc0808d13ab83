#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vbqc/deviation.hpp"
#include "vbqc/traps.hpp"

namespace vbqc {

enum class TrapChooser {
    UniformIndexVariant,  // uniform over the eight catalog rows (protocol default)
    UniformStabilizer,    // uniform over the three stabilizers, then a row within
};

struct ScheduleEntry {
    bool is_trap = false;
    int catalog_row = 0;  // valid when is_trap
};

// i.i.d. Bernoulli(p) trap choice per run; trap runs draw a catalog row per
// the chooser. p must lie in (0, 1].
std::vector<ScheduleEntry> schedule_runs(int num_total, double p, TrapChooser chooser,
                                         Rng& rng);

// Wilson score interval for a binomial proportion (default 95%).
double wilson_upper(std::int64_t failures, std::int64_t trials, double z = 1.959963984540054);
double wilson_lower(std::int64_t failures, std::int64_t trials, double z = 1.959963984540054);

struct EpsilonMode {
    enum class Kind { Individual, Mbqc };
    Kind kind = Kind::Mbqc;
    int n = 4;  // qubit count for the individual-trap bound

    static EpsilonMode individual(int n) { return {Kind::Individual, n}; }
    static EpsilonMode mbqc() { return {Kind::Mbqc, 4}; }
};

// min(1, n * t) for individual traps, min(1, 4 t / p) for MBQC traps.
double epsilon_bound(double t_avg_upper, double p, EpsilonMode mode);

struct SessionOptions {
    BlindMode blind_mode = BlindMode::Restricted;
    TrapChooser chooser = TrapChooser::UniformIndexVariant;
    bool keep_transcripts = true;
};

struct VerificationReport {
    std::int64_t num_runs = 0;
    std::int64_t num_traps = 0;
    std::int64_t num_trap_failures = 0;
    std::int64_t num_computation_runs = 0;
    double p = 0.0;
    bool t_avg_defined = false;
    double t_avg = 0.0;
    double wilson_upper95 = 1.0;
    double wilson_lower95 = 0.0;
    double epsilon_bound = 1.0;
    // Fraction of computation runs whose sampled deviation string was harmful;
    // present when the model unravels each run to a Pauli string.
    std::optional<double> empirical_epsilon;
};

struct SessionResult {
    VerificationReport report;
    std::vector<RunTranscript> transcripts;
};

// Interleaved verification: per run the verifier either executes the given
// computation or a freshly blinded trap. Per-run randomness comes from child
// seeds of a session key, so runs are order-independent and reproducible.
// The computation must declare parity-invariant outputs.
SessionResult run_verified_session(int num_runs, double p, const PatternSpec& computation,
                                   const DeviationModel& deviation, Rng& rng,
                                   const SessionOptions& options = {});

struct ExactErrorRates {
    double epsilon = 0.0;              // weight of harmful classes
    std::vector<double> t_per_row;     // one per catalog row
    std::array<double, 3> t_per_stabilizer{};
    double t_avg = 0.0;                // per the chooser's row distribution
};

// Exact rates for a Pauli channel adversary. epsilon counts every string
// whose class is neither CCCC nor (for parity-invariant computations) ACCA.
ExactErrorRates exact_error_rates(const PauliChannel& channel, const PatternSpec& computation,
                                  TrapChooser chooser = TrapChooser::UniformIndexVariant);

}  // namespace vbqc
