#include "vbqc/session.hpp"

#include <cmath>
#include <stdexcept>

namespace vbqc {

namespace {

// Catalog rows grouped by the stabilizer they measure.
const std::array<std::vector<int>, 3>& rows_by_stabilizer() {
    static const std::array<std::vector<int>, 3> groups = [] {
        std::array<std::vector<int>, 3> g;
        const auto& cat = trap_catalog();
        for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
            g[static_cast<std::size_t>(cat[static_cast<std::size_t>(i)].stabilizer)].push_back(i);
        }
        return g;
    }();
    return groups;
}

int draw_row(TrapChooser chooser, Rng& rng) {
    if (chooser == TrapChooser::UniformIndexVariant) {
        return static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(trap_catalog().size())));
    }
    const auto& groups = rows_by_stabilizer();
    const auto& g = groups[rng.uniform_int(3)];
    return g[rng.uniform_int(static_cast<std::uint32_t>(g.size()))];
}

}  // namespace

std::vector<ScheduleEntry> schedule_runs(int num_total, double p, TrapChooser chooser,
                                         Rng& rng) {
    if (num_total < 1) throw std::invalid_argument("need at least one run");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
    std::vector<ScheduleEntry> out;
    out.reserve(static_cast<std::size_t>(num_total));
    for (int i = 0; i < num_total; ++i) {
        ScheduleEntry e;
        e.is_trap = rng.uniform() < p;
        if (e.is_trap) e.catalog_row = draw_row(chooser, rng);
        out.push_back(e);
    }
    return out;
}

double wilson_upper(std::int64_t failures, std::int64_t trials, double z) {
    if (trials <= 0) return 1.0;
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = ph + z2 / (2.0 * n);
    double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n));
    return std::min(1.0, (center + half) / denom);
}

double wilson_lower(std::int64_t failures, std::int64_t trials, double z) {
    if (trials <= 0) return 0.0;
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = ph + z2 / (2.0 * n);
    double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n));
    return std::max(0.0, (center - half) / denom);
}

double epsilon_bound(double t_avg_upper, double p, EpsilonMode mode) {
    if (t_avg_upper < 0.0) throw std::invalid_argument("t must be nonnegative");
    if (mode.kind == EpsilonMode::Kind::Individual) {
        if (mode.n < 1) throw std::invalid_argument("qubit count must be positive");
        return std::min(1.0, static_cast<double>(mode.n) * t_avg_upper);
    }
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
    return std::min(1.0, 4.0 * t_avg_upper / p);
}

SessionResult run_verified_session(int num_runs, double p, const PatternSpec& computation,
                                   const DeviationModel& deviation, Rng& rng,
                                   const SessionOptions& options) {
    computation.validate();
    if (!computation.parity_invariant_outputs) {
        throw std::invalid_argument(
            "verified sessions require a computation with parity-invariant outputs");
    }
    const std::uint64_t session_key = rng.next_u64();
    Rng schedule_rng(Rng::child_seed(session_key, 0));
    auto schedule = schedule_runs(num_runs, p, options.chooser, schedule_rng);

    SessionResult res;
    res.report.num_runs = num_runs;
    res.report.p = p;

    bool pauli_trackable = true;
    std::int64_t harmful_computation_runs = 0;

    for (int i = 0; i < num_runs; ++i) {
        Rng run_rng(Rng::child_seed(session_key, static_cast<std::uint64_t>(i) + 1));
        const ScheduleEntry& e = schedule[static_cast<std::size_t>(i)];
        RunTranscript t;
        std::optional<PauliString> sampled;
        if (e.is_trap) {
            const TrapSpec& base = trap_catalog()[static_cast<std::size_t>(e.catalog_row)];
            TrapSpec fresh = base.rerandomized(options.blind_mode, run_rng);
            t.kind = RunTranscript::Kind::Trap;
            t.pattern = fresh.to_pattern();
            t.outcome = execute_pattern(t.pattern, deviation, run_rng, &sampled);
            t.trap = std::move(fresh);
            t.verdict = check_trap(t);
            res.report.num_traps++;
            if (t.verdict == Verdict::Fail) res.report.num_trap_failures++;
        } else {
            t.kind = RunTranscript::Kind::Computation;
            t.pattern = computation;
            t.outcome = execute_pattern(computation, deviation, run_rng, &sampled);
            t.verdict = Verdict::NotApplicable;
            res.report.num_computation_runs++;
            if (sampled.has_value()) {
                if (!harmless_class(classify_pauli(*sampled))) harmful_computation_runs++;
            } else {
                pauli_trackable = false;
            }
        }
        if (options.keep_transcripts) res.transcripts.push_back(std::move(t));
    }

    auto& rep = res.report;
    if (rep.num_traps > 0) {
        rep.t_avg_defined = true;
        rep.t_avg = static_cast<double>(rep.num_trap_failures) /
                    static_cast<double>(rep.num_traps);
        rep.wilson_upper95 = wilson_upper(rep.num_trap_failures, rep.num_traps);
        rep.wilson_lower95 = wilson_lower(rep.num_trap_failures, rep.num_traps);
        rep.epsilon_bound = epsilon_bound(rep.wilson_upper95, p, EpsilonMode::mbqc());
    } else {
        rep.t_avg_defined = false;
        rep.epsilon_bound = 1.0;
    }
    if (pauli_trackable && rep.num_computation_runs > 0) {
        rep.empirical_epsilon = static_cast<double>(harmful_computation_runs) /
                                static_cast<double>(rep.num_computation_runs);
    }
    return res;
}

ExactErrorRates exact_error_rates(const PauliChannel& channel, const PatternSpec& computation,
                                  TrapChooser chooser) {
    channel.validate();
    computation.validate();
    if (channel.terms.front().first.size() != 4) {
        throw std::invalid_argument("exact rates are defined for 4-qubit channels");
    }
    const bool parity_invariant = computation.parity_invariant_outputs;
    const auto& cat = trap_catalog();
    ExactErrorRates out;
    out.t_per_row.assign(cat.size(), 0.0);
    for (const auto& [pauli, w] : channel.terms) {
        CommutationClass cls = classify_pauli(pauli);
        bool harmless = !cls.anti[0] && !cls.anti[1] && !cls.anti[2] && !cls.anti[3];
        if (parity_invariant) harmless = harmless_class(cls);
        if (!harmless) out.epsilon += w;
        for (std::size_t rix = 0; rix < cat.size(); ++rix) {
            if (class_flips_support(cls, cat[rix].support)) out.t_per_row[rix] += w;
        }
        for (int k = 0; k < kNumStabilizers; ++k) {
            if (class_flips_support(cls, stabilizer_supports()[static_cast<std::size_t>(k)])) {
                out.t_per_stabilizer[static_cast<std::size_t>(k)] += w;
            }
        }
    }
    if (chooser == TrapChooser::UniformIndexVariant) {
        for (double t : out.t_per_row) out.t_avg += t;
        out.t_avg /= static_cast<double>(out.t_per_row.size());
    } else {
        for (double t : out.t_per_stabilizer) out.t_avg += t;
        out.t_avg /= 3.0;
    }
    return out;
}

}  // namespace vbqc
