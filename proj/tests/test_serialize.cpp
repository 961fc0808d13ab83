#include <doctest.h>

#include "vbqc/serialize.hpp"

using namespace vbqc;

TEST_CASE("pattern round-trips through JSON with angles as eighths") {
    PatternSpec p = bell_settings()[2].to_pattern();
    json j = pattern_to_json(p);
    CHECK(j["thetas_eighths"][2] == 1);
    CHECK(j["bases"][0]["z_basis"] == true);
    CHECK(j["bases"][3]["delta_eighths"] == 6);
    PatternSpec q = pattern_from_json(j);
    CHECK(q.graph == p.graph);
    for (int v = 0; v < 4; ++v) {
        const auto i = static_cast<std::size_t>(v);
        CHECK(q.thetas[i] == p.thetas[i]);
        CHECK(q.bases[i] == p.bases[i]);
        CHECK(q.r_bits[i] == p.r_bits[i]);
    }
    CHECK(q.parity_invariant_outputs == p.parity_invariant_outputs);
}

TEST_CASE("custom graphs survive the round trip") {
    auto g = ClusterGraph::custom(5, {{0, 1}, {1, 4}, {2, 3}, {3, 4}});
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK(back.layout == Layout::Custom);
}

TEST_CASE("deviation models round-trip; delta-conditioned ones refuse") {
    PauliChannel ch;
    ch.terms = {{PauliString::parse("XIII"), 0.25}, {PauliString::identity(4), 0.75}};
    auto back = deviation_from_json(deviation_to_json(ch));
    REQUIRE(std::holds_alternative<PauliChannel>(back));
    CHECK(std::get<PauliChannel>(back).terms[0].first.str() == "XIII");
    CHECK(std::get<PauliChannel>(back).terms[0].second == doctest::Approx(0.25));

    auto dep = deviation_from_json(deviation_to_json(Depolarizing{0.026}));
    CHECK(std::get<Depolarizing>(dep).rate == doctest::Approx(0.026));

    auto fp = deviation_from_json(deviation_to_json(FixedPauli{PauliString::parse("YZZY")}));
    CHECK(std::get<FixedPauli>(fp).pauli.str() == "YZZY");

    CHECK(std::holds_alternative<Honest>(deviation_from_json(deviation_to_json(Honest{}))));

    DeltaConditioned dc;
    dc.choose = [](const std::vector<Basis>&) -> ConcreteDeviation { return Honest{}; };
    CHECK_THROWS_AS(deviation_to_json(DeviationModel{dc}), std::invalid_argument);

    CHECK_THROWS_AS(deviation_from_json(json{{"kind", "nope"}}), std::invalid_argument);
    json bad_channel{{"kind", "pauli_channel"},
                     {"terms", json::array({json{{"pauli", "XIII"}, {"weight", 0.7}}})}};
    CHECK_THROWS_AS(deviation_from_json(bad_channel), std::invalid_argument);
}

TEST_CASE("transcripts carry the protocol record") {
    const auto& trap = trap_catalog()[0];
    RunTranscript t;
    t.kind = RunTranscript::Kind::Trap;
    t.trap = trap;
    t.pattern = trap.to_pattern();
    Rng rng(5);
    t.outcome = execute_pattern(t.pattern, Honest{}, rng);
    t.verdict = check_trap(t);
    json j = transcript_to_json(t, 17);
    CHECK(j["run_index"] == 17);
    CHECK(j["kind"] == "trap");
    CHECK(j["trap_index"] == 1);
    CHECK(j["raw_bits"].size() == 4);
    CHECK(j["decoded_bits"].size() == 4);
    CHECK(j["verdict"] == "pass");
    CHECK(j["parity_qubits"] == json::array({1, 2, 3, 4}));
    // the recorded phis close the delta = theta + phi + pi*r relation
    for (int v = 0; v < 4; ++v) {
        int th = j["thetas_eighths"][static_cast<std::size_t>(v)].get<int>();
        int de = j["deltas_eighths"][static_cast<std::size_t>(v)].get<int>();
        int ph = j["phis_eighths"][static_cast<std::size_t>(v)].get<int>();
        int r = j["r_bits"][static_cast<std::size_t>(v)].get<int>();
        CHECK(((th + ph + 4 * r) % 8 + 8) % 8 == de);
    }
}

TEST_CASE("report JSON and CSV carry the same fields") {
    VerificationReport r;
    r.num_runs = 100;
    r.num_traps = 52;
    r.num_trap_failures = 3;
    r.num_computation_runs = 48;
    r.p = 0.5;
    r.t_avg_defined = true;
    r.t_avg = 3.0 / 52.0;
    r.wilson_upper95 = 0.16;
    r.wilson_lower95 = 0.02;
    r.epsilon_bound = 1.0;
    r.empirical_epsilon = 0.05;
    json j = report_to_json(r);
    CHECK(j["num_traps"] == 52);
    CHECK(j["empirical_epsilon"] == doctest::Approx(0.05));
    std::string csv = report_to_csv(r);
    CHECK(csv.find("num_trap_failures,3") != std::string::npos);
    CHECK(csv.find("epsilon_bound,1.0") != std::string::npos);
}

TEST_CASE("unitary adversaries round-trip densely") {
    // 1-qubit Hadamard embedded as a 4-qubit unitary on the first qubit
    const std::size_t d = 16;
    std::vector<cd> u(d * d, cd{0, 0});
    const double s = 0.7071067811865475244;
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t low = i & 7u;
        std::size_t hi = i >> 3;
        // H acts on the top bit
        u[((0u << 3) | low) * d + i] = (hi == 0) ? cd{s, 0} : cd{s, 0};
        u[((1u << 3) | low) * d + i] = (hi == 0) ? cd{s, 0} : cd{-s, 0};
    }
    PreMeasureUnitary pm{4, u};
    pm.validate();
    auto back = deviation_from_json(deviation_to_json(pm));
    REQUIRE(std::holds_alternative<PreMeasureUnitary>(back));
    const auto& b = std::get<PreMeasureUnitary>(back);
    for (std::size_t i = 0; i < d * d; ++i) CHECK(std::abs(b.matrix[i] - u[i]) < 1e-12);
}
