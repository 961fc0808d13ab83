#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "vbqc/rng.hpp"
#include "vbqc/state.hpp"

namespace vbqc {

// Prover deviation models. They act on the pre-measurement register in the
// computational frame, i.e. after the per-qubit Rz(-delta), H layer and
// immediately before the Z measurements — the frame in which commutation
// classes against the measurement are defined.

struct Honest {};

struct FixedPauli {
    PauliString pauli;
};

struct PauliChannel {
    std::vector<std::pair<PauliString, double>> terms;
    void validate() const;  // weights >= 0, sum 1 within 1e-12, equal lengths
};

struct PreMeasureUnitary {
    int num_qubits = 4;
    std::vector<cd> matrix;  // 2^n x 2^n row-major
    void validate() const;   // unitary within 1e-10
};

struct Depolarizing {
    double rate = 0.0;  // per qubit: with probability rate apply a uniform X/Y/Z
    void validate() const;
};

using ConcreteDeviation =
    std::variant<Honest, FixedPauli, PauliChannel, PreMeasureUnitary, Depolarizing>;

// Hook for adversaries conditioned on the instruction vector; the built-in
// suite is delta-independent.
struct DeltaConditioned {
    std::function<ConcreteDeviation(const std::vector<Basis>&)> choose;
};

using DeviationModel = std::variant<Honest, FixedPauli, PauliChannel, PreMeasureUnitary,
                                    Depolarizing, DeltaConditioned>;

ConcreteDeviation resolve_deviation(const DeviationModel& model,
                                    const std::vector<Basis>& deltas);

void validate_deviation(const ConcreteDeviation& model, int num_qubits);

// Applies one sampled unraveling of the model. When the branch is a Pauli
// string (fixed, channel term, or sampled depolarizing letters), it is also
// reported through `sampled` so callers can classify the run.
void apply_deviation(const ConcreteDeviation& model, PureState& state, Rng& rng,
                     std::optional<PauliString>* sampled = nullptr);

// Exact unraveling into weighted Pauli branches. Unitary deviations are not
// Pauli-decomposed; they are handled densely by callers.
std::vector<std::pair<PauliString, double>> pauli_branches(const ConcreteDeviation& model,
                                                           int num_qubits);
bool has_pauli_unraveling(const ConcreteDeviation& model);

}  // namespace vbqc
