#include "vbqc/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vbqc {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr int kMaxQubits = 16;

void check_qubit(const PureState& s, int q) {
    if (q < 0 || q >= s.num_qubits()) throw std::invalid_argument("qubit index out of range");
}
}  // namespace

PureState::PureState(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("num_qubits must be in 1..16");
    }
    amps_.assign(static_cast<std::size_t>(1) << n_, cd{0.0, 0.0});
    amps_[0] = cd{1.0, 0.0};
}

PureState PureState::from_amplitudes(int num_qubits, std::vector<cd> amps) {
    PureState s(num_qubits);
    if (amps.size() != s.dim()) {
        throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
    }
    s.amps_ = std::move(amps);
    double n2 = s.norm_sq();
    if (std::abs(n2 - 1.0) > 1e-9) throw std::invalid_argument("state is not normalized");
    s.renormalize();
    return s;
}

double PureState::norm_sq() const {
    double n2 = 0.0;
    for (const cd& a : amps_) n2 += std::norm(a);
    return n2;
}

void PureState::renormalize() {
    double n = std::sqrt(norm_sq());
    if (n <= 0.0) throw std::runtime_error("cannot renormalize the zero vector");
    for (cd& a : amps_) a /= n;
}

PureState make_blind_state(Angle theta) {
    PureState s(1);
    s.mutable_amplitudes()[0] = cd{kInvSqrt2, 0.0};
    s.mutable_amplitudes()[1] = std::polar(kInvSqrt2, theta.radians());
    return s;
}

PureState tensor(const PureState& a, const PureState& b) {
    int n = a.num_qubits() + b.num_qubits();
    std::vector<cd> out(static_cast<std::size_t>(1) << n);
    std::size_t db = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            out[i * db + j] = a.amplitude(i) * b.amplitude(j);
        }
    }
    return PureState::from_amplitudes(n, std::move(out));
}

cd inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("states must have the same number of qubits");
    }
    cd r{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        r += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return r;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

void apply_single_qubit(PureState& s, int q, const Mat2& u) {
    check_qubit(s, q);
    auto& a = s.mutable_amplitudes();
    const std::size_t step = static_cast<std::size_t>(1) << (s.num_qubits() - 1 - q);
    const std::size_t block = step << 1;
    const std::size_t dim = a.size();
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cd v0 = a[i0], v1 = a[i1];
            a[i0] = u[0] * v0 + u[1] * v1;
            a[i1] = u[2] * v0 + u[3] * v1;
        }
    }
}

Mat2 rz_matrix(double radians) {
    return Mat2{cd{1.0, 0.0}, cd{0.0, 0.0}, cd{0.0, 0.0}, std::polar(1.0, radians)};
}

Mat2 h_matrix() {
    return Mat2{cd{kInvSqrt2, 0}, cd{kInvSqrt2, 0}, cd{kInvSqrt2, 0}, cd{-kInvSqrt2, 0}};
}

void apply_h(PureState& s, int q) { apply_single_qubit(s, q, h_matrix()); }

void apply_x(PureState& s, int q) {
    apply_single_qubit(s, q, Mat2{cd{0, 0}, cd{1, 0}, cd{1, 0}, cd{0, 0}});
}

void apply_y(PureState& s, int q) {
    apply_single_qubit(s, q, Mat2{cd{0, 0}, cd{0, -1}, cd{0, 1}, cd{0, 0}});
}

void apply_z(PureState& s, int q) {
    apply_single_qubit(s, q, Mat2{cd{1, 0}, cd{0, 0}, cd{0, 0}, cd{-1, 0}});
}

void apply_rz(PureState& s, int q, double radians) {
    apply_single_qubit(s, q, rz_matrix(radians));
}

void apply_rz(PureState& s, int q, Angle a) { apply_rz(s, q, a.radians()); }

void apply_cz(PureState& s, int a, int b) {
    check_qubit(s, a);
    check_qubit(s, b);
    if (a == b) throw std::invalid_argument("CZ targets must be distinct");
    auto& amps = s.mutable_amplitudes();
    const std::size_t ma = static_cast<std::size_t>(1) << (s.num_qubits() - 1 - a);
    const std::size_t mb = static_cast<std::size_t>(1) << (s.num_qubits() - 1 - b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && (i & mb)) amps[i] = -amps[i];
    }
}

void apply_pauli(PureState& s, const PauliString& p) {
    if (p.size() != s.num_qubits()) {
        throw std::invalid_argument("Pauli string length must match register size");
    }
    const int n = s.num_qubits();
    std::size_t flip = 0;
    for (int q = 0; q < n; ++q) {
        if (p.flips_bit(q)) flip |= static_cast<std::size_t>(1) << (n - 1 - q);
    }
    const auto& in = s.amplitudes();
    std::vector<cd> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        cd phase{1.0, 0.0};
        for (int q = 0; q < n; ++q) {
            const int b = s.bit(i, q);
            switch (p.letter(q)) {
                case Pauli::Y: phase *= (b == 0) ? cd{0, 1} : cd{0, -1}; break;
                case Pauli::Z: if (b) phase = -phase; break;
                default: break;
            }
        }
        out[i ^ flip] = phase * in[i];
    }
    s.mutable_amplitudes() = std::move(out);
}

void apply_dense_unitary(PureState& s, const std::vector<cd>& u) {
    const std::size_t d = s.dim();
    if (u.size() != d * d) throw std::invalid_argument("unitary dimension mismatch");
    const auto& in = s.amplitudes();
    std::vector<cd> out(d, cd{0, 0});
    for (std::size_t r = 0; r < d; ++r) {
        cd acc{0, 0};
        const cd* row = &u[r * d];
        for (std::size_t c = 0; c < d; ++c) acc += row[c] * in[c];
        out[r] = acc;
    }
    s.mutable_amplitudes() = std::move(out);
}

double expectation(const PureState& s, const PauliString& p) {
    if (p.size() != s.num_qubits()) {
        throw std::invalid_argument("Pauli string length must match register size");
    }
    PureState t = s;
    apply_pauli(t, p);
    cd v = inner_product(s, t);
    if (std::abs(v.imag()) > 1e-10) throw std::runtime_error("expectation has imaginary part");
    return v.real();
}

namespace {

// Rotation taking the |+-_delta> basis to the computational basis.
void rotate_to_basis_frame(PureState& s, int q, const Basis& basis) {
    if (!basis.z_marker) {
        apply_rz(s, q, -basis.delta.radians());
        apply_h(s, q);
    }
}

void rotate_from_basis_frame(PureState& s, int q, const Basis& basis) {
    if (!basis.z_marker) {
        apply_h(s, q);
        apply_rz(s, q, basis.delta.radians());
    }
}

double prob_bit0(const PureState& s, int q) {
    double p0 = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s.bit(i, q) == 0) p0 += std::norm(s.amplitude(i));
    }
    return p0;
}

void project_bit(PureState& s, int q, int value) {
    auto& a = s.mutable_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (s.bit(i, q) != value) a[i] = cd{0, 0};
    }
    s.renormalize();
}

}  // namespace

double prob_outcome0(const PureState& s, int q, const Basis& basis) {
    check_qubit(s, q);
    PureState t = s;
    rotate_to_basis_frame(t, q, basis);
    // clamp 1e-14 negative drift
    return std::min(1.0, std::max(0.0, prob_bit0(t, q)));
}

MeasurementRecord measure_in_basis(PureState& s, int q, const Basis& basis, double u) {
    check_qubit(s, q);
    rotate_to_basis_frame(s, q, basis);
    double p0 = std::min(1.0, std::max(0.0, prob_bit0(s, q)));
    int outcome = (u < p0) ? 0 : 1;
    project_bit(s, q, outcome);
    rotate_from_basis_frame(s, q, basis);
    return MeasurementRecord{q, basis, outcome};
}

int measure_computational(PureState& s, int q, double u) {
    check_qubit(s, q);
    double p0 = std::min(1.0, std::max(0.0, prob_bit0(s, q)));
    int outcome = (u < p0) ? 0 : 1;
    project_bit(s, q, outcome);
    return outcome;
}

PureState remove_qubit(const PureState& s, int q, int outcome) {
    check_qubit(s, q);
    if (s.num_qubits() < 2) throw std::invalid_argument("cannot remove the last qubit");
    const int n = s.num_qubits();
    const std::size_t hi_mask = (static_cast<std::size_t>(1) << (n - 1 - q)) - 1;
    std::vector<cd> out(s.dim() >> 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::size_t upper = j & ~hi_mask;
        std::size_t lower = j & hi_mask;
        std::size_t idx = (upper << 1) |
                          (static_cast<std::size_t>(outcome) << (n - 1 - q)) | lower;
        out[j] = s.amplitude(idx);
    }
    return PureState::from_amplitudes(n - 1, std::move(out));  // throws if entangled
}

MixedState::MixedState(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 8) {
        throw std::invalid_argument("MixedState supports 1..8 qubits");
    }
    m_.assign(dim() * dim(), cd{0, 0});
}

MixedState MixedState::from_pure(const PureState& s) {
    MixedState m(s.num_qubits());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            m.entry(r, c) = s.amplitude(r) * std::conj(s.amplitude(c));
        }
    }
    return m;
}

double MixedState::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += entry(i, i).real();
    return t;
}

double MixedState::max_hermiticity_violation() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) {
            worst = std::max(worst, std::abs(entry(r, c) - std::conj(entry(c, r))));
        }
    }
    return worst;
}

double MixedState::max_abs_diff(const MixedState& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        worst = std::max(worst, std::abs(m_[i] - o.m_[i]));
    }
    return worst;
}

MixedState MixedState::maximally_mixed(int num_qubits) {
    MixedState m(num_qubits);
    double v = 1.0 / static_cast<double>(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) m.entry(i, i) = cd{v, 0};
    return m;
}

MixedState average_density(const std::vector<PureState>& states,
                           const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw std::invalid_argument("states and weights must be nonempty and equal-length");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
    MixedState m(states[0].num_qubits());
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].num_qubits() != m.num_qubits()) {
            throw std::invalid_argument("all states must have the same number of qubits");
        }
        for (std::size_t r = 0; r < m.dim(); ++r) {
            for (std::size_t c = 0; c < m.dim(); ++c) {
                m.entry(r, c) +=
                    weights[k] * states[k].amplitude(r) * std::conj(states[k].amplitude(c));
            }
        }
    }
    return m;
}

MixedState reduced_density(const PureState& s, int q) {
    check_qubit(s, q);
    const int n = s.num_qubits();
    const std::size_t mask = static_cast<std::size_t>(1) << (n - 1 - q);
    MixedState rho(1);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t j = i | mask;
        int bi = s.bit(i, q);
        if (bi == 0) {
            rho.entry(0, 0) += s.amplitude(i) * std::conj(s.amplitude(i));
            rho.entry(0, 1) += s.amplitude(i) * std::conj(s.amplitude(j));
            rho.entry(1, 0) += s.amplitude(j) * std::conj(s.amplitude(i));
            rho.entry(1, 1) += s.amplitude(j) * std::conj(s.amplitude(j));
        }
    }
    return rho;
}

}  // namespace vbqc
