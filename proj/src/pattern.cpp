#include "vbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vbqc {

std::vector<int> PatternSpec::identity_order(int n) {
    std::vector<int> o(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 0);
    return o;
}

void PatternSpec::validate() const {
    graph.validate();
    const std::size_t n = static_cast<std::size_t>(graph.num_vertices);
    if (thetas.size() != n || bases.size() != n || r_bits.size() != n) {
        throw std::invalid_argument("pattern vectors must have one entry per vertex");
    }
    for (int r : r_bits) {
        if (r != 0 && r != 1) throw std::invalid_argument("r bits must be 0 or 1");
    }
    if (measurement_order.size() != n) {
        throw std::invalid_argument("measurement order must list every vertex once");
    }
    std::vector<bool> seen(n, false);
    for (int v : measurement_order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("measurement order must be a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Angle recover_phi(Angle theta, Angle delta, int r_bit) {
    Angle phi = delta - theta;
    if (r_bit) phi = phi - Angle::pi();
    return phi;
}

PureState build_cluster(const ClusterGraph& graph, const std::vector<Angle>& thetas) {
    graph.validate();
    if (thetas.size() != static_cast<std::size_t>(graph.num_vertices)) {
        throw std::invalid_argument("one theta per vertex required");
    }
    PureState s(graph.num_vertices);
    // |+...+> then per-vertex phases; CZ order is irrelevant (diagonal gates).
    const std::size_t dim = s.dim();
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    auto& a = s.mutable_amplitudes();
    for (std::size_t i = 0; i < dim; ++i) a[i] = cd{amp, 0.0};
    for (int v = 0; v < graph.num_vertices; ++v) {
        apply_rz(s, v, thetas[static_cast<std::size_t>(v)]);
    }
    for (const auto& [x, y] : graph.edges) apply_cz(s, x, y);
    return s;
}

PureState premeasurement_state(const PatternSpec& spec) {
    spec.validate();
    PureState s = build_cluster(spec.graph, spec.thetas);
    for (int v = 0; v < spec.num_vertices(); ++v) {
        apply_rz(s, v, -spec.physical_delta(v).radians());
        apply_h(s, v);
    }
    return s;
}

PatternOutcome execute_pattern(const PatternSpec& spec, const DeviationModel& deviation,
                               Rng& rng, std::optional<PauliString>* sampled) {
    PureState s = premeasurement_state(spec);
    ConcreteDeviation dev = resolve_deviation(deviation, spec.bases);
    apply_deviation(dev, s, rng, sampled);
    PatternOutcome out;
    out.raw_bits.assign(static_cast<std::size_t>(spec.num_vertices()), 0);
    for (int v : spec.measurement_order) {
        out.raw_bits[static_cast<std::size_t>(v)] = measure_computational(s, v, rng.uniform());
    }
    out.decoded_bits.resize(out.raw_bits.size());
    for (std::size_t j = 0; j < out.raw_bits.size(); ++j) {
        out.decoded_bits[j] = out.raw_bits[j] ^ spec.r_bits[j];
    }
    return out;
}

std::vector<double> expected_honest_distribution(const PatternSpec& spec) {
    if (spec.graph.num_vertices > 10) {
        throw std::invalid_argument("exact distribution capped at 10 qubits");
    }
    PureState s = premeasurement_state(spec);
    std::vector<double> p(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) p[i] = std::norm(s.amplitude(i));
    return p;
}

std::vector<double> exact_distribution(const PatternSpec& spec,
                                       const DeviationModel& deviation) {
    if (spec.graph.num_vertices > 10) {
        throw std::invalid_argument("exact distribution capped at 10 qubits");
    }
    PureState base = premeasurement_state(spec);
    ConcreteDeviation dev = resolve_deviation(deviation, spec.bases);
    validate_deviation(dev, base.num_qubits());
    std::vector<double> p(base.dim(), 0.0);
    if (const auto* un = std::get_if<PreMeasureUnitary>(&dev)) {
        PureState s = base;
        apply_dense_unitary(s, un->matrix);
        for (std::size_t i = 0; i < s.dim(); ++i) p[i] = std::norm(s.amplitude(i));
        return p;
    }
    for (const auto& [pauli, w] : pauli_branches(dev, base.num_qubits())) {
        PureState s = base;
        if (!pauli.is_identity()) apply_pauli(s, pauli);
        for (std::size_t i = 0; i < s.dim(); ++i) p[i] += w * std::norm(s.amplitude(i));
    }
    return p;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distribution size mismatch");
    double tv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
    return 0.5 * tv;
}

ZigzagCircuitResult zigzag_circuit(const std::array<Angle, 4>& thetas,
                                   const std::array<Basis, 4>& bases) {
    std::array<Angle, 4> deltas;
    for (int v = 0; v < 4; ++v) deltas[v] = bases[v].resolve(thetas[v]);

    auto lower_input = [&](int b4) {
        PureState w = make_blind_state(Angle::from_eighths(0));  // |+>
        apply_rz(w, 0, (-deltas[3] + thetas[3]).radians());
        if (b4) apply_z(w, 0);
        apply_h(w, 0);
        return w;
    };

    ZigzagCircuitResult res{PureState(2), std::vector<double>(16, 0.0)};
    for (int b2 = 0; b2 < 2; ++b2) {
        for (int b4 = 0; b4 < 2; ++b4) {
            PureState upper = make_blind_state(Angle::from_eighths(0));
            PureState s = tensor(upper, lower_input(b4));  // qubit 0 = upper wire
            apply_cz(s, 0, 1);
            if (b2 == 0 && b4 == 0) res.prepared = s;
            // Bell-test half
            apply_rz(s, 0, (-deltas[1] + thetas[1]).radians());
            if (b2) apply_z(s, 0);
            apply_h(s, 0);
            apply_rz(s, 0, thetas[0].radians());
            apply_rz(s, 1, thetas[2].radians());
            // measure upper at delta1, lower at delta3
            apply_rz(s, 0, -deltas[0].radians());
            apply_h(s, 0);
            apply_rz(s, 1, -deltas[2].radians());
            apply_h(s, 1);
            for (int b1 = 0; b1 < 2; ++b1) {
                for (int b3 = 0; b3 < 2; ++b3) {
                    const std::size_t amp_idx =
                        (static_cast<std::size_t>(b1) << 1) | static_cast<std::size_t>(b3);
                    const std::size_t out_idx =
                        (static_cast<std::size_t>(b1) << 3) | (static_cast<std::size_t>(b2) << 2) |
                        (static_cast<std::size_t>(b3) << 1) | static_cast<std::size_t>(b4);
                    res.distribution[out_idx] += 0.25 * std::norm(s.amplitude(amp_idx));
                }
            }
        }
    }
    return res;
}

}  // namespace vbqc
