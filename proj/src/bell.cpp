#include "vbqc/bell.hpp"

#include <cmath>
#include <stdexcept>

#include "vbqc/detection.hpp"

namespace vbqc {

namespace {

BellSetting make_setting(BellSetting::Label label, std::array<int, 4> theta_e,
                         std::array<int, 4> delta_e, bool z_marker_on_1,
                         std::array<int, 4> r, bool relabel) {
    BellSetting s;
    s.label = label;
    for (int i = 0; i < 4; ++i) {
        const auto j = static_cast<std::size_t>(i);
        s.thetas[j] = Angle::from_eighths(theta_e[j]);
        s.bases[j] = Basis::equatorial(Angle::from_eighths(delta_e[j]));
    }
    if (z_marker_on_1) s.bases[0] = Basis::z();  // resolves to delta1 = theta1
    s.r_bits = r;
    s.relabel = relabel;
    return s;
}

}  // namespace

std::string BellSetting::label_str() const {
    switch (label) {
        case Label::AlphaBeta: return "alpha,beta";
        case Label::AlphaBetaPrime: return "alpha,beta'";
        case Label::AlphaPrimeBeta: return "alpha',beta";
        case Label::AlphaPrimeBetaPrime: return "alpha',beta'";
    }
    return "alpha,beta";
}

BellSetting::Label BellSetting::label_from_str(const std::string& s) {
    if (s == "alpha,beta") return Label::AlphaBeta;
    if (s == "alpha,beta'") return Label::AlphaBetaPrime;
    if (s == "alpha',beta") return Label::AlphaPrimeBeta;
    if (s == "alpha',beta'") return Label::AlphaPrimeBetaPrime;
    throw std::invalid_argument("unknown Bell setting label: " + s);
}

PatternSpec BellSetting::to_pattern() const {
    PatternSpec p;
    p.graph = ClusterGraph::zigzag4();
    p.thetas.assign(thetas.begin(), thetas.end());
    p.bases.assign(bases.begin(), bases.end());
    p.r_bits.assign(r_bits.begin(), r_bits.end());
    p.measurement_order = PatternSpec::identity_order(4);
    p.parity_invariant_outputs = true;
    p.validate();
    return p;
}

const std::array<BellSetting, 4>& bell_settings() {
    // Measurement-settings table; angles in eighths of pi. The alpha' rows
    // decode with r1 = 1, which pins the sigma_z outcome labeling to the
    // reported correlation signs.
    static const std::array<BellSetting, 4> rows = {
        make_setting(BellSetting::Label::AlphaBeta, {0, 2, 3, 0}, {2, 6, 0, 6}, false,
                     {0, 0, 0, 0}, false),
        make_setting(BellSetting::Label::AlphaBetaPrime, {0, 0, 3, 0}, {2, 0, 6, 6}, false,
                     {0, 0, 0, 0}, true),
        make_setting(BellSetting::Label::AlphaPrimeBeta, {0, 2, 1, 0}, {0, 6, 6, 6}, true,
                     {1, 0, 0, 0}, false),
        make_setting(BellSetting::Label::AlphaPrimeBetaPrime, {0, 0, 1, 0}, {0, 0, 0, 6}, true,
                     {1, 0, 0, 0}, false),
    };
    return rows;
}

PureState prepared_logical_state(Angle theta4, Angle delta4) {
    PureState lower = make_blind_state(Angle::from_eighths(0));
    apply_rz(lower, 0, (-delta4 + theta4).radians());
    apply_h(lower, 0);
    PureState s = tensor(make_blind_state(Angle::from_eighths(0)), lower);
    apply_cz(s, 0, 1);
    return s;
}

std::pair<int, int> decode_logical(const BellSetting& setting,
                                   const std::vector<int>& raw_bits) {
    if (raw_bits.size() != 4) throw std::invalid_argument("need four raw bits");
    int a = raw_bits[0] ^ setting.r_bits[0];
    if (setting.alpha_row()) a ^= raw_bits[1];
    int b = raw_bits[2] ^ setting.r_bits[2] ^ raw_bits[3];
    return {a, b};
}

CorrelationEstimate CorrelationEstimate::from_counts(const std::array<std::uint64_t, 4>& c) {
    CorrelationEstimate est;
    est.counts = c;
    double total = 0.0;
    for (auto v : c) total += static_cast<double>(v);
    if (total <= 0.0) throw std::invalid_argument("correlation needs at least one count");
    est.E = (static_cast<double>(c[0]) - static_cast<double>(c[1]) -
             static_cast<double>(c[2]) + static_cast<double>(c[3])) /
            total;
    est.stderr_E = std::sqrt(std::max(0.0, 1.0 - est.E * est.E) / total);
    return est;
}

CorrelationEstimate estimate_correlation(const BellSetting& setting, int num_shots,
                                         const DeviationModel& deviation, Rng& rng) {
    if (num_shots < 1) throw std::invalid_argument("num_shots must be >= 1");
    PatternSpec pattern = setting.to_pattern();
    std::array<std::uint64_t, 4> counts{};
    for (int s = 0; s < num_shots; ++s) {
        PatternOutcome out = execute_pattern(pattern, deviation, rng);
        auto [a, b] = decode_logical(setting, out.raw_bits);
        if (setting.relabel) {
            a ^= 1;
            b ^= 1;
        }
        counts[static_cast<std::size_t>((a << 1) | b)]++;
    }
    return CorrelationEstimate::from_counts(counts);
}

double exact_correlation(const BellSetting& setting, const DeviationModel& deviation) {
    PatternSpec pattern = setting.to_pattern();
    std::vector<double> dist = exact_distribution(pattern, deviation);
    double E = 0.0;
    for (std::size_t idx = 0; idx < dist.size(); ++idx) {
        std::vector<int> bits = {static_cast<int>((idx >> 3) & 1), static_cast<int>((idx >> 2) & 1),
                                 static_cast<int>((idx >> 1) & 1), static_cast<int>(idx & 1)};
        auto [a, b] = decode_logical(setting, bits);
        E += dist[idx] * ((a == b) ? 1.0 : -1.0);  // relabel flips both bits: E invariant
    }
    return E;
}

CHSHResult chsh(const std::array<CorrelationEstimate, 4>& estimates) {
    CHSHResult r;
    r.estimates = estimates;
    r.S = std::abs(estimates[0].E - estimates[1].E) + std::abs(estimates[2].E + estimates[3].E);
    double var = 0.0;
    for (const auto& e : estimates) var += e.stderr_E * e.stderr_E;
    r.S_stderr = std::sqrt(var);
    return r;
}

bool acca_invariance_check(const BellSetting& setting, const PauliString& pauli) {
    if (!(classify_pauli(pauli) == CommutationClass::parse("ACCA"))) {
        throw std::invalid_argument("deviation is not in class ACCA");
    }
    double honest = exact_correlation(setting, Honest{});
    double deviated = exact_correlation(setting, FixedPauli{pauli});
    return std::abs(honest - deviated) <= 1e-9;
}

}  // namespace vbqc
