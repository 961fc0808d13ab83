#include "vbqc/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace vbqc {

json angle_to_json(Angle a) { return a.eighths(); }

Angle angle_from_json(const json& j) {
    if (!j.is_number_integer()) throw std::invalid_argument("angle must be an integer (eighths of pi)");
    return Angle::from_eighths(j.get<int>());
}

json basis_to_json(const Basis& b) {
    if (b.z_marker) return json{{"z_basis", true}};
    return json{{"delta_eighths", b.delta.eighths()}};
}

Basis basis_from_json(const json& j) {
    if (j.contains("z_basis") && j.at("z_basis").get<bool>()) return Basis::z();
    return Basis::equatorial(angle_from_json(j.at("delta_eighths")));
}

json graph_to_json(const ClusterGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    return json{{"layout", layout_name(g.layout)},
                {"num_vertices", g.num_vertices},
                {"edges", edges}};
}

ClusterGraph graph_from_json(const json& j) {
    Layout layout = layout_from_name(j.at("layout").get<std::string>());
    switch (layout) {
        case Layout::Linear4: return ClusterGraph::linear4();
        case Layout::Horseshoe4: return ClusterGraph::horseshoe4();
        case Layout::Zigzag4: return ClusterGraph::zigzag4();
        case Layout::Custom: break;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return ClusterGraph::custom(j.at("num_vertices").get<int>(), std::move(edges));
}

json pattern_to_json(const PatternSpec& p) {
    json bases = json::array();
    for (const auto& b : p.bases) bases.push_back(basis_to_json(b));
    json thetas = json::array();
    for (const auto& t : p.thetas) thetas.push_back(t.eighths());
    return json{{"graph", graph_to_json(p.graph)},
                {"thetas_eighths", thetas},
                {"bases", bases},
                {"r_bits", p.r_bits},
                {"measurement_order", p.measurement_order},
                {"parity_invariant_outputs", p.parity_invariant_outputs}};
}

PatternSpec pattern_from_json(const json& j) {
    PatternSpec p;
    p.graph = graph_from_json(j.at("graph"));
    for (const auto& t : j.at("thetas_eighths")) p.thetas.push_back(angle_from_json(t));
    for (const auto& b : j.at("bases")) p.bases.push_back(basis_from_json(b));
    p.r_bits = j.at("r_bits").get<std::vector<int>>();
    if (j.contains("measurement_order")) {
        p.measurement_order = j.at("measurement_order").get<std::vector<int>>();
    } else {
        p.measurement_order = PatternSpec::identity_order(p.graph.num_vertices);
    }
    p.parity_invariant_outputs = j.value("parity_invariant_outputs", false);
    p.validate();
    return p;
}

json deviation_to_json(const DeviationModel& m) {
    if (std::holds_alternative<Honest>(m)) return json{{"kind", "honest"}};
    if (const auto* fp = std::get_if<FixedPauli>(&m)) {
        return json{{"kind", "fixed_pauli"}, {"pauli", fp->pauli.str()}};
    }
    if (const auto* ch = std::get_if<PauliChannel>(&m)) {
        json terms = json::array();
        for (const auto& [p, w] : ch->terms) {
            terms.push_back(json{{"pauli", p.str()}, {"weight", w}});
        }
        return json{{"kind", "pauli_channel"}, {"terms", terms}};
    }
    if (const auto* dep = std::get_if<Depolarizing>(&m)) {
        return json{{"kind", "depolarizing"}, {"rate", dep->rate}};
    }
    if (const auto* un = std::get_if<PreMeasureUnitary>(&m)) {
        json rows = json::array();
        const std::size_t d = static_cast<std::size_t>(1) << un->num_qubits;
        for (std::size_t r = 0; r < d; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < d; ++c) {
                const cd& v = un->matrix[r * d + c];
                row.push_back(json::array({v.real(), v.imag()}));
            }
            rows.push_back(std::move(row));
        }
        return json{{"kind", "pre_measure_unitary"}, {"num_qubits", un->num_qubits},
                    {"matrix", rows}};
    }
    throw std::invalid_argument("delta-conditioned deviations are not serializable");
}

DeviationModel deviation_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "honest") return Honest{};
    if (kind == "fixed_pauli") {
        return FixedPauli{PauliString::parse(j.at("pauli").get<std::string>())};
    }
    if (kind == "pauli_channel") {
        PauliChannel ch;
        for (const auto& t : j.at("terms")) {
            ch.terms.emplace_back(PauliString::parse(t.at("pauli").get<std::string>()),
                                  t.at("weight").get<double>());
        }
        ch.validate();
        return ch;
    }
    if (kind == "depolarizing") {
        Depolarizing d{j.at("rate").get<double>()};
        d.validate();
        return d;
    }
    if (kind == "pre_measure_unitary") {
        PreMeasureUnitary u;
        u.num_qubits = j.at("num_qubits").get<int>();
        const std::size_t d = static_cast<std::size_t>(1) << u.num_qubits;
        u.matrix.resize(d * d);
        const auto& rows = j.at("matrix");
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                const auto& v = rows.at(r).at(c);
                u.matrix[r * d + c] = cd{v.at(0).get<double>(), v.at(1).get<double>()};
            }
        }
        u.validate();
        return u;
    }
    throw std::invalid_argument("unknown deviation kind: " + kind);
}

json trap_spec_to_json(const TrapSpec& t) {
    json thetas = json::array(), phis = json::array(), deltas = json::array();
    for (int i = 0; i < 4; ++i) {
        const auto j = static_cast<std::size_t>(i);
        thetas.push_back(t.thetas[j].eighths());
        phis.push_back(t.phis[j].eighths());
        deltas.push_back(t.deltas()[j].eighths());
    }
    json support = json::array();
    for (int q : t.support) support.push_back(q + 1);  // reported 1-based
    return json{{"trap_index", t.trap_index},
                {"variant", t.variant},
                {"state", t.state_label},
                {"layout", layout_name(t.layout)},
                {"thetas_eighths", thetas},
                {"phis_eighths", phis},
                {"r_bits", t.base_r},
                {"deltas_eighths", deltas},
                {"trap_state_angle_eighths", t.trap_state_angle.eighths()},
                {"parity_qubits", support},
                {"expected_parity", t.expected_parity}};
}

json transcript_to_json(const RunTranscript& t, int run_index) {
    json out{{"run_index", run_index},
             {"kind", t.kind == RunTranscript::Kind::Trap ? "trap" : "computation"}};
    if (t.trap.has_value()) {
        out["trap_index"] = t.trap->trap_index;
        out["trap_variant"] = t.trap->variant;
        json support = json::array();
        for (int q : t.trap->support) support.push_back(q + 1);
        out["parity_qubits"] = support;
    }
    json thetas = json::array(), deltas = json::array(), phis = json::array(),
         zmarks = json::array();
    for (int v = 0; v < t.pattern.num_vertices(); ++v) {
        const auto j = static_cast<std::size_t>(v);
        Angle delta = t.pattern.physical_delta(v);
        thetas.push_back(t.pattern.thetas[j].eighths());
        deltas.push_back(delta.eighths());
        phis.push_back(recover_phi(t.pattern.thetas[j], delta, t.pattern.r_bits[j]).eighths());
        zmarks.push_back(t.pattern.bases[j].z_marker);
    }
    out["thetas_eighths"] = thetas;
    out["deltas_eighths"] = deltas;
    out["phis_eighths"] = phis;
    out["z_marker"] = zmarks;
    out["r_bits"] = t.pattern.r_bits;
    out["measurement_order"] = t.pattern.measurement_order;
    out["raw_bits"] = t.outcome.raw_bits;
    out["decoded_bits"] = t.outcome.decoded_bits;
    out["verdict"] = verdict_name(t.verdict);
    return out;
}

json report_to_json(const VerificationReport& r) {
    json out{{"num_runs", r.num_runs},
             {"num_traps", r.num_traps},
             {"num_trap_failures", r.num_trap_failures},
             {"num_computation_runs", r.num_computation_runs},
             {"p", r.p},
             {"t_avg_defined", r.t_avg_defined},
             {"t_avg", r.t_avg},
             {"wilson_lower95", r.wilson_lower95},
             {"wilson_upper95", r.wilson_upper95},
             {"epsilon_bound", r.epsilon_bound}};
    if (r.empirical_epsilon.has_value()) out["empirical_epsilon"] = *r.empirical_epsilon;
    return out;
}

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "field,value\n";
    json j = report_to_json(r);
    for (const auto& [key, value] : j.items()) {
        os << key << "," << value.dump() << "\n";
    }
    return os.str();
}

json correlation_to_json(const CorrelationEstimate& e) {
    return json{{"counts", e.counts}, {"E", e.E}, {"stderr", e.stderr_E}};
}

json chsh_to_json(const CHSHResult& r) {
    const auto& settings = bell_settings();
    json est = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        json e = correlation_to_json(r.estimates[i]);
        e["setting"] = settings[i].label_str();
        est.push_back(std::move(e));
    }
    return json{{"estimates", est}, {"S", r.S}, {"S_stderr", r.S_stderr}};
}

}  // namespace vbqc
