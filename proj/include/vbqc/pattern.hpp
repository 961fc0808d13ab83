#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vbqc/angle.hpp"
#include "vbqc/deviation.hpp"
#include "vbqc/graph.hpp"
#include "vbqc/rng.hpp"
#include "vbqc/state.hpp"

namespace vbqc {

// Non-adaptive measurement pattern: fixed per-vertex instructions, parity
// decoding on the verifier side.
struct PatternSpec {
    ClusterGraph graph;
    std::vector<Angle> thetas;
    std::vector<Basis> bases;
    std::vector<int> r_bits;
    std::vector<int> measurement_order;  // permutation of 0..n-1
    // Declares that the decoded output depends only on parities that are
    // invariant under simultaneous m1, m4 flips; required for verified runs.
    bool parity_invariant_outputs = false;

    void validate() const;
    int num_vertices() const { return graph.num_vertices; }
    Angle physical_delta(int v) const { return bases[v].resolve(thetas[v]); }
    static std::vector<int> identity_order(int n);
};

struct PatternOutcome {
    std::vector<int> raw_bits;      // b
    std::vector<int> decoded_bits;  // m = b xor r
};

// phi = delta - theta - pi*r on the grid; with the complementary r the
// solution shifts by pi. Returns the phi for the given r.
Angle recover_phi(Angle theta, Angle delta, int r_bit);

PureState build_cluster(const ClusterGraph& graph, const std::vector<Angle>& thetas);

// Cluster rotated into the computational frame: Rz(-delta_j), H on every
// vertex. Deviations act on this register; measuring it in the Z basis
// yields the raw bits b.
PureState premeasurement_state(const PatternSpec& spec);

PatternOutcome execute_pattern(const PatternSpec& spec, const DeviationModel& deviation,
                               Rng& rng, std::optional<PauliString>* sampled = nullptr);

// Exact joint distribution over 2^n outcomes of the raw bits, honest prover.
// Index convention: b1 is the most significant bit. n <= 10.
std::vector<double> expected_honest_distribution(const PatternSpec& spec);

// Exact joint distribution with a deviation, by branch enumeration (Pauli
// models) or dense application (unitary).
std::vector<double> exact_distribution(const PatternSpec& spec,
                                       const DeviationModel& deviation);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

// The appendix's two-wire circuit equivalent of the zigzag pattern:
//   upper (a): |+>  --------- CZ - Rz(-d2+t2) - Z^{b2} - H - Rz(t1) - <d1| -> b1
//   lower (b): |+> - Rz(-d4+t4) - Z^{b4} - H - CZ - Rz(t3) ---------- <d3| -> b3
// b2, b4 are the teleportation byproducts, each uniform. Returns the
// prepared two-qubit state after state generation on the (b2,b4) = (0,0)
// branch, plus the exact joint distribution over (b1..b4) in the same index
// convention as expected_honest_distribution.
struct ZigzagCircuitResult {
    PureState prepared;  // 2 logical qubits, upper wire = qubit 0
    std::vector<double> distribution;
};

ZigzagCircuitResult zigzag_circuit(const std::array<Angle, 4>& thetas,
                                   const std::array<Basis, 4>& bases);

}  // namespace vbqc
