#include "vbqc/deviation.hpp"

#include <cmath>
#include <stdexcept>

namespace vbqc {

void PauliChannel::validate() const {
    if (terms.empty()) throw std::invalid_argument("Pauli channel needs at least one term");
    double sum = 0.0;
    int len = terms.front().first.size();
    for (const auto& [p, w] : terms) {
        if (p.size() != len) throw std::invalid_argument("Pauli channel strings differ in length");
        if (w < 0.0) throw std::invalid_argument("Pauli channel weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("Pauli channel weights must sum to 1");
    }
}

void PreMeasureUnitary::validate() const {
    const std::size_t d = static_cast<std::size_t>(1) << num_qubits;
    if (matrix.size() != d * d) throw std::invalid_argument("unitary has wrong dimension");
    // U U^dagger = I within 1e-10
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cd acc{0, 0};
            for (std::size_t k = 0; k < d; ++k) {
                acc += matrix[r * d + k] * std::conj(matrix[c * d + k]);
            }
            cd want = (r == c) ? cd{1, 0} : cd{0, 0};
            if (std::abs(acc - want) > 1e-10) {
                throw std::invalid_argument("matrix is not unitary within 1e-10");
            }
        }
    }
}

void Depolarizing::validate() const {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("depolarizing rate must be in [0,1]");
}

ConcreteDeviation resolve_deviation(const DeviationModel& model,
                                    const std::vector<Basis>& deltas) {
    if (const auto* dc = std::get_if<DeltaConditioned>(&model)) {
        if (!dc->choose) throw std::invalid_argument("DeltaConditioned has no chooser");
        return dc->choose(deltas);
    }
    return std::visit(
        [](const auto& m) -> ConcreteDeviation {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, DeltaConditioned>) {
                throw std::logic_error("unreachable");
            } else {
                return m;
            }
        },
        model);
}

void validate_deviation(const ConcreteDeviation& model, int num_qubits) {
    if (const auto* fp = std::get_if<FixedPauli>(&model)) {
        if (fp->pauli.size() != num_qubits) {
            throw std::invalid_argument("deviation Pauli length must match register size");
        }
    } else if (const auto* ch = std::get_if<PauliChannel>(&model)) {
        ch->validate();
        if (ch->terms.front().first.size() != num_qubits) {
            throw std::invalid_argument("channel Pauli length must match register size");
        }
    } else if (const auto* u = std::get_if<PreMeasureUnitary>(&model)) {
        u->validate();
        if (u->num_qubits != num_qubits) {
            throw std::invalid_argument("unitary register size mismatch");
        }
    } else if (const auto* d = std::get_if<Depolarizing>(&model)) {
        d->validate();
    }
}

void apply_deviation(const ConcreteDeviation& model, PureState& state, Rng& rng,
                     std::optional<PauliString>* sampled) {
    validate_deviation(model, state.num_qubits());
    if (sampled) sampled->reset();
    if (std::holds_alternative<Honest>(model)) {
        if (sampled) *sampled = PauliString::identity(state.num_qubits());
        return;
    }
    if (const auto* fp = std::get_if<FixedPauli>(&model)) {
        apply_pauli(state, fp->pauli);
        if (sampled) *sampled = fp->pauli;
        return;
    }
    if (const auto* ch = std::get_if<PauliChannel>(&model)) {
        double u = rng.uniform();
        double acc = 0.0;
        const PauliString* pick = &ch->terms.back().first;
        for (const auto& [p, w] : ch->terms) {
            acc += w;
            if (u < acc) {
                pick = &p;
                break;
            }
        }
        apply_pauli(state, *pick);
        if (sampled) *sampled = *pick;
        return;
    }
    if (const auto* un = std::get_if<PreMeasureUnitary>(&model)) {
        apply_dense_unitary(state, un->matrix);
        return;
    }
    const auto& dep = std::get<Depolarizing>(model);
    std::vector<Pauli> letters(static_cast<std::size_t>(state.num_qubits()), Pauli::I);
    for (int q = 0; q < state.num_qubits(); ++q) {
        if (rng.uniform() < dep.rate) {
            letters[static_cast<std::size_t>(q)] =
                static_cast<Pauli>(1 + rng.uniform_int(3));
        }
    }
    PauliString p{std::move(letters)};
    if (!p.is_identity()) apply_pauli(state, p);
    if (sampled) *sampled = p;
}

bool has_pauli_unraveling(const ConcreteDeviation& model) {
    return !std::holds_alternative<PreMeasureUnitary>(model);
}

std::vector<std::pair<PauliString, double>> pauli_branches(const ConcreteDeviation& model,
                                                           int num_qubits) {
    validate_deviation(model, num_qubits);
    if (std::holds_alternative<Honest>(model)) {
        return {{PauliString::identity(num_qubits), 1.0}};
    }
    if (const auto* fp = std::get_if<FixedPauli>(&model)) {
        return {{fp->pauli, 1.0}};
    }
    if (const auto* ch = std::get_if<PauliChannel>(&model)) {
        return ch->terms;
    }
    if (std::holds_alternative<PreMeasureUnitary>(model)) {
        throw std::invalid_argument("unitary deviation has no Pauli unraveling");
    }
    const auto& dep = std::get<Depolarizing>(model);
    if (num_qubits > 8) throw std::invalid_argument("exact depolarizing expansion capped at 8 qubits");
    const double q = dep.rate;
    std::vector<std::pair<PauliString, double>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < num_qubits; ++i) total *= 4;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        PauliString p = PauliString::from_index(num_qubits, idx);
        double w = 1.0;
        for (int j = 0; j < num_qubits; ++j) {
            w *= (p.letter(j) == Pauli::I) ? (1.0 - q) : (q / 3.0);
        }
        if (w > 0.0) out.emplace_back(std::move(p), w);
    }
    return out;
}

}  // namespace vbqc
