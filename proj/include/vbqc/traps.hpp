#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vbqc/detection.hpp"
#include "vbqc/pattern.hpp"

namespace vbqc {

enum class BlindMode {
    Restricted,  // qubits 1 and 4 fixed to |+> as in the experiment
    Full,        // every theta drawn from the full grid
};

// One row of the experimental trap-settings table: blind phases, measurement
// instructions with the trap vertex's angle symbolic, and the stabilizer
// correlation the verifier checks. phis/base_r are the canonical split
// delta = theta + phi + pi*r of the listed settings.
struct TrapSpec {
    int trap_index = 1;  // 1..4, protocol numbering
    int variant = 0;     // two prepared states per qubit
    std::string state_label;
    Layout layout = Layout::Linear4;
    std::array<Angle, 4> thetas;
    std::array<Angle, 4> phis;
    std::array<int, 4> base_r;
    Angle trap_state_angle;        // absolute basis angle of the prepared trap state
    int stabilizer = 0;            // index into trap_stabilizers()
    std::vector<int> support;      // 0-based parity support; contains the trap vertex
    int expected_parity = 0;       // XOR of decoded bits over the support

    int trap_vertex() const { return trap_index - 1; }

    // delta_j = theta_j + phi_j + pi * r_j for the stored thetas / r bits.
    std::array<Angle, 4> deltas() const;

    // Fresh blinding: resamples thetas (per mode) and all four r bits, keeping
    // phi fixed. The expected parity is invariant under both.
    TrapSpec rerandomized(BlindMode mode, Rng& rng) const;

    PatternSpec to_pattern() const;
};

// The eight experimental settings (four trap qubits, two prepared states
// each), in table order.
const std::vector<TrapSpec>& trap_catalog();

// The four sample settings from the measurement-angle table (one per trap
// index); these satisfy the per-index trap-outcome columns verbatim.
const std::vector<TrapSpec>& trap_angle_table_samples();

// The single-qubit state held by the trap vertex once the other three
// vertices are measured with decoded outcomes m (trap vertex's entry
// ignored). Index 4 evaluates the Rz/H chain quoted for the linear cluster;
// indices 1-3 use the closed-form reductions of the dummy-preparation table.
PureState expected_trap_state(int trap_index, const std::array<Angle, 4>& thetas,
                              const std::array<Angle, 4>& deltas,
                              const std::array<int, 4>& m_bits);

enum class Verdict { Pass, Fail, NotApplicable };

std::string verdict_name(Verdict v);

struct RunTranscript {
    enum class Kind { Computation, Trap };
    Kind kind = Kind::Computation;
    std::optional<TrapSpec> trap;
    PatternSpec pattern;
    PatternOutcome outcome;
    Verdict verdict = Verdict::NotApplicable;
};

Verdict check_trap(const RunTranscript& t);

}  // namespace vbqc
