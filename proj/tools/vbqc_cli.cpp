// Experiment runner: reproduces the protocol's table- and figure-level
// results from seeded, deterministic simulations and emits machine-readable
// reports. Exit codes: 0 success, 2 configuration error, 3 fixture mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vbqc/bell.hpp"
#include "vbqc/serialize.hpp"
#include "vbqc/session.hpp"

namespace {

using vbqc::json;

constexpr double kCalibratedNoiseRate = 0.026;

struct Options {
    std::uint64_t seed = 1;
    int shots = 10000;
    int runs = 10000;
    double p = 0.5;
    double noise = -1.0;  // <0: none
    std::string adversary_path;
    std::string out_path;
    std::string format = "json";
    std::string transcript_path;
    std::string config_path;
};

vbqc::DeviationModel load_adversary(const Options& opt) {
    if (!opt.adversary_path.empty()) {
        std::ifstream in(opt.adversary_path);
        if (!in) throw std::invalid_argument("cannot open adversary file: " + opt.adversary_path);
        json j = json::parse(in);
        return vbqc::deviation_from_json(j);
    }
    if (opt.noise >= 0.0) {
        vbqc::Depolarizing d{opt.noise};
        d.validate();
        return d;
    }
    return vbqc::Honest{};
}

void emit(const Options& opt, const json& report) {
    std::string text;
    if (opt.format == "json") {
        text = report.dump(2);
        text.push_back('\n');
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        for (const auto& [k, v] : report.items()) os << k << "," << v.dump() << "\n";
        text = os.str();
    } else {
        throw std::invalid_argument("format must be json or csv");
    }
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + opt.out_path);
        out << text;
    }
}

json cmd_blindness() {
    std::vector<vbqc::PureState> states;
    std::vector<double> weights(8, 0.125);
    for (int e = 0; e < 8; ++e) {
        states.push_back(vbqc::make_blind_state(vbqc::Angle::from_eighths(e)));
    }
    auto avg = vbqc::average_density(states, weights);
    double dev = avg.max_abs_diff(vbqc::MixedState::maximally_mixed(1));
    return json{{"command", "blindness"},
                {"max_abs_deviation_from_i_over_2", dev},
                {"pass", dev <= 1e-12}};
}

// Computed commute/anticommute grid vs. the transcribed table; any cell
// difference is a fixture mismatch.
json cmd_detection_table(int& exit_code) {
    auto computed = vbqc::detection_table();
    auto fixture = vbqc::paper_detection_fixture();
    json rows = json::array();
    int mismatches = 0;
    for (int i = 0; i < 16; ++i) {
        const auto& c = computed[static_cast<std::size_t>(i)];
        const auto& f = fixture[static_cast<std::size_t>(i)];
        bool same = c.cls == f.cls && c.detected == f.detected && c.harmless == f.harmless;
        if (!same) mismatches++;
        rows.push_back(json{{"class", c.cls.str()},
                            {"detected_by_stabilizer", c.detected},
                            {"harmless", c.harmless},
                            {"matches_fixture", same}});
    }
    // exhaustive scan of all 256 strings
    int undetected_strings = 0;
    bool scan_ok = true;
    for (int idx = 0; idx < 256; ++idx) {
        auto p = vbqc::PauliString::from_index(4, static_cast<std::uint64_t>(idx));
        auto cls = vbqc::classify_pauli(p);
        bool flips_none = true;
        for (const auto& sup : vbqc::stabilizer_supports()) {
            if (vbqc::class_flips_support(cls, sup)) flips_none = false;
        }
        if (flips_none) {
            undetected_strings++;
            if (!vbqc::harmless_class(cls)) scan_ok = false;
        } else if (vbqc::harmless_class(cls)) {
            scan_ok = false;
        }
    }
    scan_ok = scan_ok && (undetected_strings == 32);  // CCCC and ACCA, 16 strings each
    if (mismatches > 0 || !scan_ok) exit_code = 3;
    return json{{"command", "detection-table"},
                {"rows", rows},
                {"mismatched_cells", mismatches},
                {"undetected_strings", undetected_strings},
                {"undetected_set_is_ccc_and_acca", scan_ok}};
}

json trap_row_report(const vbqc::TrapSpec& trap, const vbqc::DeviationModel& deviation,
                     int shots, vbqc::Rng& rng) {
    vbqc::PatternSpec pattern = trap.to_pattern();
    // exact pass probability
    auto dist = vbqc::exact_distribution(pattern, deviation);
    double exact_pass = 0.0;
    for (std::size_t idx = 0; idx < dist.size(); ++idx) {
        int parity = 0;
        for (int q : trap.support) {
            int b = static_cast<int>((idx >> (3 - q)) & 1u);
            parity ^= b ^ pattern.r_bits[static_cast<std::size_t>(q)];
        }
        if (parity == trap.expected_parity) exact_pass += dist[idx];
    }
    // sampled
    std::int64_t passes = 0;
    for (int s = 0; s < shots; ++s) {
        vbqc::RunTranscript t;
        t.kind = vbqc::RunTranscript::Kind::Trap;
        t.trap = trap;
        t.pattern = pattern;
        t.outcome = vbqc::execute_pattern(pattern, deviation, rng);
        if (vbqc::check_trap(t) == vbqc::Verdict::Pass) passes++;
    }
    json j = vbqc::trap_spec_to_json(trap);
    j["exact_pass_probability"] = exact_pass;
    j["sampled_pass_probability"] = static_cast<double>(passes) / shots;
    j["shots"] = shots;
    return j;
}

json cmd_trap_suite(const Options& opt) {
    vbqc::DeviationModel deviation = load_adversary(opt);
    vbqc::Rng rng(opt.seed);
    json rows = json::array();
    double min_exact = 1.0;
    for (const auto& trap : vbqc::trap_catalog()) {
        json row = trap_row_report(trap, deviation, opt.shots, rng);
        min_exact = std::min(min_exact, row["exact_pass_probability"].get<double>());
        rows.push_back(std::move(row));
    }
    return json{{"command", "trap-suite"},
                {"seed", opt.seed},
                {"adversary", vbqc::deviation_to_json(deviation)},
                {"traps", rows},
                {"min_exact_pass_probability", min_exact}};
}

json cmd_bell(const Options& opt) {
    vbqc::DeviationModel deviation = load_adversary(opt);
    vbqc::Rng rng(opt.seed);
    std::array<vbqc::CorrelationEstimate, 4> sampled;
    std::array<double, 4> exact{};
    const auto& settings = vbqc::bell_settings();
    for (std::size_t i = 0; i < 4; ++i) {
        vbqc::Rng child(vbqc::Rng::child_seed(opt.seed, i));
        sampled[i] = vbqc::estimate_correlation(settings[i], opt.shots, deviation, child);
        exact[i] = vbqc::exact_correlation(settings[i], deviation);
    }
    auto result = vbqc::chsh(sampled);
    double exact_S = std::abs(exact[0] - exact[1]) + std::abs(exact[2] + exact[3]);
    json j = vbqc::chsh_to_json(result);
    j["command"] = "bell";
    j["seed"] = opt.seed;
    j["adversary"] = vbqc::deviation_to_json(deviation);
    j["exact_E"] = exact;
    j["exact_S"] = exact_S;
    return j;
}

json cmd_verify_session(const Options& opt) {
    vbqc::DeviationModel deviation = load_adversary(opt);
    vbqc::Rng rng(opt.seed);
    vbqc::PatternSpec computation = vbqc::bell_settings()[0].to_pattern();
    vbqc::SessionOptions sopts;
    sopts.keep_transcripts = !opt.transcript_path.empty();
    auto result = vbqc::run_verified_session(opt.runs, opt.p, computation, deviation, rng, sopts);
    if (!opt.transcript_path.empty()) {
        std::ofstream out(opt.transcript_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open transcript file");
        for (std::size_t i = 0; i < result.transcripts.size(); ++i) {
            out << vbqc::transcript_to_json(result.transcripts[i], static_cast<int>(i)).dump()
                << "\n";
        }
    }
    json j = vbqc::report_to_json(result.report);
    j["command"] = "verify-session";
    j["seed"] = opt.seed;
    j["adversary"] = vbqc::deviation_to_json(deviation);
    // exact reference rates when the adversary is a Pauli channel
    if (const auto* ch = std::get_if<vbqc::PauliChannel>(&deviation)) {
        auto rates = vbqc::exact_error_rates(*ch, computation);
        j["exact_epsilon"] = rates.epsilon;
        j["exact_t_avg"] = rates.t_avg;
    }
    return j;
}

json cmd_bound_sweep(const Options& opt) {
    json points = json::array();
    double calibrated = -1.0;
    double best_gap = 1e9;
    for (int i = 0; i <= 24; ++i) {
        double q = 0.0025 * i;
        vbqc::DeviationModel noise = vbqc::Depolarizing{q};
        std::array<double, 4> E{};
        for (std::size_t k = 0; k < 4; ++k) {
            E[k] = vbqc::exact_correlation(vbqc::bell_settings()[k], noise);
        }
        double S = std::abs(E[0] - E[1]) + std::abs(E[2] + E[3]);
        double min_pass = 1.0;
        for (const auto& trap : vbqc::trap_catalog()) {
            auto pattern = trap.to_pattern();
            auto dist = vbqc::exact_distribution(pattern, noise);
            double pass = 0.0;
            for (std::size_t idx = 0; idx < dist.size(); ++idx) {
                int parity = 0;
                for (int qb : trap.support) {
                    parity ^= static_cast<int>((idx >> (3 - qb)) & 1u) ^
                              pattern.r_bits[static_cast<std::size_t>(qb)];
                }
                if (parity == trap.expected_parity) pass += dist[idx];
            }
            min_pass = std::min(min_pass, pass);
        }
        bool in_band = S >= 2.34 && S <= 2.66;
        if (std::abs(S - 2.498) < best_gap) {
            best_gap = std::abs(S - 2.498);
            calibrated = q;
        }
        points.push_back(json{{"rate", q},
                              {"exact_S", S},
                              {"min_trap_pass_probability", min_pass},
                              {"in_reported_band", in_band}});
    }
    return json{{"command", "bound-sweep"},
                {"seed", opt.seed},
                {"points", points},
                {"calibrated_rate", calibrated}};
}

json cmd_reproduce_paper(const Options& opt, int& exit_code) {
    json out;
    out["command"] = "reproduce-paper";
    out["seed"] = opt.seed;
    out["blindness"] = cmd_blindness();
    out["detection_table"] = cmd_detection_table(exit_code);

    Options noiseless = opt;
    noiseless.shots = 10000;
    noiseless.seed = vbqc::Rng::child_seed(opt.seed, 101);
    out["trap_suite_noiseless"] = cmd_trap_suite(noiseless);

    Options calibrated = noiseless;
    calibrated.noise = kCalibratedNoiseRate;
    calibrated.seed = vbqc::Rng::child_seed(opt.seed, 102);
    out["trap_suite_calibrated"] = cmd_trap_suite(calibrated);

    Options bell_noiseless = opt;
    bell_noiseless.shots = 100000;
    bell_noiseless.seed = vbqc::Rng::child_seed(opt.seed, 103);
    out["bell_noiseless"] = cmd_bell(bell_noiseless);

    Options bell_cal = bell_noiseless;
    bell_cal.noise = kCalibratedNoiseRate;
    bell_cal.seed = vbqc::Rng::child_seed(opt.seed, 104);
    out["bell_calibrated"] = cmd_bell(bell_cal);

    out["bound_sweep"] = cmd_bound_sweep(opt);

    bool blind_ok = out["blindness"]["pass"].get<bool>();
    bool table_ok = out["detection_table"]["mismatched_cells"].get<int>() == 0;
    bool traps_ok = out["trap_suite_noiseless"]["min_exact_pass_probability"].get<double>() >
                    1.0 - 1e-9;
    if (!blind_ok || !table_ok || !traps_ok) exit_code = 3;
    out["all_checks_pass"] = blind_ok && table_ok && traps_ok;
    return out;
}

void apply_config_file(Options& opt, std::string& command) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + opt.config_path);
    json j = json::parse(in);
    if (j.contains("command")) command = j.at("command").get<std::string>();
    if (j.contains("seed")) opt.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("shots")) opt.shots = j.at("shots").get<int>();
    if (j.contains("runs")) opt.runs = j.at("runs").get<int>();
    if (j.contains("p")) opt.p = j.at("p").get<double>();
    if (j.contains("noise")) opt.noise = j.at("noise").get<double>();
    if (j.contains("adversary")) {
        if (j.at("adversary").is_string()) {
            opt.adversary_path = j.at("adversary").get<std::string>();
        } else {
            // inline adversary: stash to a temp file path-free route
            throw std::invalid_argument("inline adversary objects go through --adversary <file>");
        }
    }
    if (j.contains("out")) opt.out_path = j.at("out").get<std::string>();
    if (j.contains("format")) opt.format = j.at("format").get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blind-MBQC verification and Bell-test simulator"};
    app.require_subcommand(0, 1);

    Options opt;
    app.add_option("--config", opt.config_path, "JSON config file mirroring the CLI flags");
    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_option("--shots", opt.shots, "samples per estimate");
    app.add_option("--runs", opt.runs, "runs per verified session");
    app.add_option("--p", opt.p, "trap probability for sessions");
    app.add_option("--noise", opt.noise, "per-qubit depolarizing rate");
    app.add_option("--adversary", opt.adversary_path, "adversary spec (JSON file)");
    app.add_option("--out", opt.out_path, "output path (default stdout)");
    app.add_option("--format", opt.format, "json|csv");
    app.add_option("--transcript", opt.transcript_path, "JSON-lines transcript output (sessions)");

    for (const char* name : {"blindness", "detection-table", "trap-suite", "bell",
                             "verify-session", "bound-sweep", "reproduce-paper"}) {
        app.add_subcommand(name)->fallthrough();
    }

    std::string command;
    try {
        app.parse(argc, argv);
        if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();
        if (!opt.config_path.empty()) apply_config_file(opt, command);
        if (command.empty()) {
            std::cerr << app.help();
            return 2;
        }
        int exit_code = 0;
        json report;
        if (command == "blindness") {
            report = cmd_blindness();
        } else if (command == "detection-table") {
            report = cmd_detection_table(exit_code);
        } else if (command == "trap-suite") {
            report = cmd_trap_suite(opt);
        } else if (command == "bell") {
            report = cmd_bell(opt);
        } else if (command == "verify-session") {
            report = cmd_verify_session(opt);
        } else if (command == "bound-sweep") {
            report = cmd_bound_sweep(opt);
        } else if (command == "reproduce-paper") {
            report = cmd_reproduce_paper(opt, exit_code);
        } else {
            std::cerr << "unknown command: " << command << "\n";
            return 2;
        }
        emit(opt, report);
        return exit_code;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
