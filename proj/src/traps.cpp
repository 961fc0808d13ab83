#include "vbqc/traps.hpp"

#include <stdexcept>

namespace vbqc {

namespace {

TrapSpec make_spec(int index, int variant, const char* label, Layout layout,
                   std::array<int, 4> theta_e, std::array<int, 4> phi_e,
                   std::array<int, 4> r, int trap_angle_e, int stab,
                   std::vector<int> support) {
    TrapSpec t;
    t.trap_index = index;
    t.variant = variant;
    t.state_label = label;
    t.layout = layout;
    for (int i = 0; i < 4; ++i) {
        t.thetas[static_cast<std::size_t>(i)] = Angle::from_eighths(theta_e[static_cast<std::size_t>(i)]);
        t.phis[static_cast<std::size_t>(i)] = Angle::from_eighths(phi_e[static_cast<std::size_t>(i)]);
    }
    t.base_r = r;
    t.trap_state_angle = Angle::from_eighths(trap_angle_e);
    t.stabilizer = stab;
    t.support = std::move(support);
    t.expected_parity = 0;  // holds for every row below; pinned by the exact oracle tests
    return t;
}

}  // namespace

std::array<Angle, 4> TrapSpec::deltas() const {
    std::array<Angle, 4> d;
    for (int i = 0; i < 4; ++i) {
        const auto j = static_cast<std::size_t>(i);
        d[j] = thetas[j] + phis[j];
        if (base_r[j]) d[j] = d[j] + Angle::pi();
    }
    return d;
}

TrapSpec TrapSpec::rerandomized(BlindMode mode, Rng& rng) const {
    TrapSpec t = *this;
    for (int i = 0; i < 4; ++i) {
        const auto j = static_cast<std::size_t>(i);
        bool fixed = (mode == BlindMode::Restricted) && (i == 0 || i == 3);
        if (!fixed) t.thetas[j] = Angle::from_eighths(static_cast<int>(rng.uniform_int(8)));
        t.base_r[j] = rng.bit();
    }
    // keep the absolute trap-state angle tracking its vertex's blind phase
    const auto tv = static_cast<std::size_t>(trap_vertex());
    t.trap_state_angle = trap_state_angle + (t.thetas[tv] - thetas[tv]);
    return t;
}

PatternSpec TrapSpec::to_pattern() const {
    PatternSpec p;
    p.graph = (layout == Layout::Horseshoe4) ? ClusterGraph::horseshoe4()
                                             : ClusterGraph::linear4();
    p.thetas.assign(thetas.begin(), thetas.end());
    auto d = deltas();
    p.bases.reserve(4);
    for (int i = 0; i < 4; ++i) p.bases.push_back(Basis::equatorial(d[static_cast<std::size_t>(i)]));
    p.r_bits.assign(base_r.begin(), base_r.end());
    p.measurement_order = PatternSpec::identity_order(4);
    p.parity_invariant_outputs = true;
    p.validate();
    return p;
}

const std::vector<TrapSpec>& trap_catalog() {
    // Experimental settings table; angles in eighths of pi. The canonical
    // (phi, r) split reproduces the listed deltas exactly, and phi matches
    // the measurement-angle table row of the stabilizer each setting
    // measures. The sigma slot (vertex outside the support) is reduced to
    // phi in [0, pi).
    static const std::vector<TrapSpec> catalog = {
        // trap1 = |-_i>: theta (0, pi/2, 0, 0), delta (dt, -pi/2, pi, -pi/2)
        make_spec(1, 0, "-i", Layout::Linear4, {0, 2, 0, 0}, {2, 0, 0, 2}, {1, 1, 1, 1}, 6, 1,
                  {0, 1, 2, 3}),
        // trap1 = |+>: theta (0, pi/2, 3pi/4, 0), delta (dt, -pi/2, 5pi/4, pi/2)
        make_spec(1, 1, "+", Layout::Linear4, {0, 2, 3, 0}, {0, 0, 2, 2}, {0, 1, 0, 0}, 0, 0,
                  {0, 2, 3}),
        // trap2 = |+>: theta (0, pi/2, pi, 0), delta (-pi/2, dt, 0, 0)
        make_spec(2, 0, "+", Layout::Horseshoe4, {0, 2, 4, 0}, {2, 2, 0, 0}, {1, 1, 1, 0}, 0, 2,
                  {0, 1, 3}),
        // trap2 = |+_i>: theta (0, 0, 0, 0), delta (pi/2, dt, 0, 0)
        make_spec(2, 1, "+i", Layout::Horseshoe4, {0, 0, 0, 0}, {2, 2, 0, 0}, {0, 0, 0, 0}, 2, 2,
                  {0, 1, 3}),
        // trap3 = Rz(3pi/4)|+>: theta (0, pi/2, 5pi/4, 0), delta (pi, -pi/2, dt, pi/2)
        make_spec(3, 0, "Rz(3pi/4)+", Layout::Horseshoe4, {0, 2, 5, 0}, {0, 0, 2, 2},
                  {1, 1, 1, 0}, 3, 0, {0, 2, 3}),
        // trap3 = Rz(pi/4)|+>: theta (0, pi/2, 7pi/4, 0), delta (pi, 0, dt, -pi/2)
        make_spec(3, 1, "Rz(pi/4)+", Layout::Horseshoe4, {0, 2, 7, 0}, {0, 2, 2, 2},
                  {1, 1, 0, 1}, 1, 0, {0, 2, 3}),
        // trap4 = |->: theta (0, pi/2, pi/4, 0), delta (pi/2, 0, 5pi/4, dt)
        make_spec(4, 0, "-", Layout::Linear4, {0, 2, 1, 0}, {2, 2, 0, 0}, {0, 1, 1, 1}, 4, 2,
                  {0, 1, 3}),
        // trap4 = |-_i>: theta (0, pi/2, 3pi/4, 0), delta (pi/2, pi/2, 7pi/4, dt)
        make_spec(4, 1, "-i", Layout::Linear4, {0, 2, 3, 0}, {2, 0, 0, 2}, {0, 0, 1, 1}, 6, 1,
                  {0, 1, 2, 3}),
    };
    return catalog;
}

const std::vector<TrapSpec>& trap_angle_table_samples() {
    static const std::vector<TrapSpec> samples = {
        // phi (0, 0, pi/2, pi/2), sample (theta,delta): (0,0) (pi/2,-pi/2) (3pi/4,5pi/4) (0,pi/2)
        make_spec(1, 0, "sample", Layout::Linear4, {0, 2, 3, 0}, {0, 0, 2, 2}, {0, 1, 0, 0}, 0, 0,
                  {0, 2, 3}),
        // phi (pi/2, 0, 0, pi/2), sample: (0,pi/2) (pi/2,pi/2) (3pi/4,7pi/4) (0,pi/2)
        make_spec(2, 0, "sample", Layout::Horseshoe4, {0, 2, 3, 0}, {2, 0, 0, 2}, {0, 0, 1, 0}, 2,
                  1, {0, 1, 2, 3}),
        make_spec(3, 0, "sample", Layout::Horseshoe4, {0, 2, 3, 0}, {2, 0, 0, 2}, {0, 0, 1, 0}, 3,
                  1, {0, 1, 2, 3}),
        // phi (pi/2, pi/2, 0, 0), sample: (0,-pi/2) (pi/2,0) (pi,0) (0,0)
        make_spec(4, 0, "sample", Layout::Linear4, {0, 2, 4, 0}, {2, 2, 0, 0}, {1, 1, 1, 0}, 0, 2,
                  {0, 1, 3}),
    };
    return samples;
}

PureState expected_trap_state(int trap_index, const std::array<Angle, 4>& thetas,
                              const std::array<Angle, 4>& deltas,
                              const std::array<int, 4>& m_bits) {
    (void)deltas;  // part of the instruction record; the reductions only need theta and m
    auto plus_times_pi = [&](int parity_bit, Angle theta) {
        PureState s = make_blind_state(parity_bit ? Angle::pi() : Angle::from_eighths(0));
        apply_rz(s, 0, theta);
        return s;
    };
    switch (trap_index) {
        case 1:
            return plus_times_pi(m_bits[2] ^ m_bits[3], thetas[0]);
        case 2:
            return plus_times_pi(m_bits[0] ^ m_bits[2] ^ m_bits[3], thetas[1]);
        case 3:
            return plus_times_pi(m_bits[0] ^ m_bits[1] ^ m_bits[3], thetas[2]);
        case 4: {
            // Rz(theta4) H Rz(m3 pi) H Rz(pi/2 + m2 pi) H Rz(pi/2 + m1 pi) |+>
            PureState s = make_blind_state(Angle::from_eighths(0));
            apply_rz(s, 0, Angle::from_eighths(2 + 4 * m_bits[0]));
            apply_h(s, 0);
            apply_rz(s, 0, Angle::from_eighths(2 + 4 * m_bits[1]));
            apply_h(s, 0);
            apply_rz(s, 0, Angle::from_eighths(4 * m_bits[2]));
            apply_h(s, 0);
            apply_rz(s, 0, thetas[3]);
            return s;
        }
        default:
            throw std::invalid_argument("trap index must be in 1..4");
    }
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

Verdict check_trap(const RunTranscript& t) {
    if (t.kind != RunTranscript::Kind::Trap || !t.trap.has_value()) {
        return Verdict::NotApplicable;
    }
    int parity = 0;
    for (int q : t.trap->support) {
        parity ^= t.outcome.decoded_bits.at(static_cast<std::size_t>(q));
    }
    return parity == t.trap->expected_parity ? Verdict::Pass : Verdict::Fail;
}

}  // namespace vbqc
