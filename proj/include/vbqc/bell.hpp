#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "vbqc/pattern.hpp"

namespace vbqc {

// One row of the blind Bell-test settings table. The logical measurement on
// wire a is alpha = pi/2 (rows 1, 2) or sigma_z (rows 3, 4, carried as the
// Z marker on vertex 1); wire b measures beta or beta'. Row 2 physically
// measures alpha + pi and beta' + pi; its counts are relabeled
// 00<->11, 01<->10, which leaves E unchanged.
struct BellSetting {
    enum class Label { AlphaBeta, AlphaBetaPrime, AlphaPrimeBeta, AlphaPrimeBetaPrime };

    Label label = Label::AlphaBeta;
    std::array<Angle, 4> thetas;
    std::array<Basis, 4> bases;
    std::array<int, 4> r_bits{};
    bool relabel = false;

    bool alpha_row() const {
        return label == Label::AlphaBeta || label == Label::AlphaBetaPrime;
    }
    std::string label_str() const;
    static Label label_from_str(const std::string& s);

    PatternSpec to_pattern() const;
};

const std::array<BellSetting, 4>& bell_settings();

// Two-qubit state after state generation on the zigzag cluster: upper wire
// |+>, lower wire H Rz(-delta4+theta4)|+>, then CPhase. -delta4+theta4 = 0
// or pi gives the product branch (lower input |0> / |1>), +-pi/2 the
// entangled branch; other grid values give the general rotated input.
PureState prepared_logical_state(Angle theta4, Angle delta4);

// Logical outcome pair (a, b) from the four raw bits:
// a = m1 (xor the upper teleport byproduct b2 on alpha rows), b = m3 xor b4.
std::pair<int, int> decode_logical(const BellSetting& setting,
                                   const std::vector<int>& raw_bits);

struct CorrelationEstimate {
    std::array<std::uint64_t, 4> counts{};  // C00, C01, C10, C11
    double E = 0.0;
    double stderr_E = 0.0;

    static CorrelationEstimate from_counts(const std::array<std::uint64_t, 4>& c);
};

CorrelationEstimate estimate_correlation(const BellSetting& setting, int num_shots,
                                         const DeviationModel& deviation, Rng& rng);

// E from the exact outcome distribution (no sampling).
double exact_correlation(const BellSetting& setting, const DeviationModel& deviation);

struct CHSHResult {
    std::array<CorrelationEstimate, 4> estimates;  // table order
    double S = 0.0;
    double S_stderr = 0.0;
};

// S = |E(a,b) - E(a,b')| + |E(a',b) + E(a',b')| with quadrature stderr.
CHSHResult chsh(const std::array<CorrelationEstimate, 4>& estimates);

// Exact E of this setting is unchanged by the given A(x)C(x)C(x)A deviation.
// Rejects strings outside the ACCA class.
bool acca_invariance_check(const BellSetting& setting, const PauliString& pauli);

}  // namespace vbqc
