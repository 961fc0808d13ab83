#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "vbqc/angle.hpp"
#include "vbqc/pauli.hpp"

namespace vbqc {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;  // row-major 2x2

// Conventions (fixed throughout):
//   - protocol qubit 1 = index 0 = most significant bit of the amplitude index;
//   - Rz(phi) = diag(1, e^{i phi}), equal to exp(-i phi sigma_z / 2) up to
//     global phase (state comparisons are fidelity-based, so either works);
//   - measuring qubit q at angle delta means Rz(-delta), H on q, then a
//     computational-basis measurement; outcome 0 <-> |+_delta>.

// Dense state vector over n qubits, n <= 16.
class PureState {
  public:
    explicit PureState(int num_qubits);  // |0...0>
    static PureState from_amplitudes(int num_qubits, std::vector<cd> amps);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cd>& amplitudes() const { return amps_; }
    cd amplitude(std::size_t idx) const { return amps_[idx]; }

    double norm_sq() const;
    void renormalize();

    int bit(std::size_t idx, int q) const {
        return static_cast<int>((idx >> (n_ - 1 - q)) & 1u);
    }

    std::vector<cd>& mutable_amplitudes() { return amps_; }

  private:
    int n_ = 0;
    std::vector<cd> amps_;
};

// |theta> = (|0> + e^{i theta}|1>) / sqrt(2)
PureState make_blind_state(Angle theta);

PureState tensor(const PureState& a, const PureState& b);

cd inner_product(const PureState& a, const PureState& b);
// |<a|b>|^2, global-phase free.
double fidelity(const PureState& a, const PureState& b);

void apply_single_qubit(PureState& s, int q, const Mat2& u);
void apply_h(PureState& s, int q);
void apply_x(PureState& s, int q);
void apply_y(PureState& s, int q);
void apply_z(PureState& s, int q);
void apply_rz(PureState& s, int q, double radians);
void apply_rz(PureState& s, int q, Angle a);
void apply_cz(PureState& s, int a, int b);
void apply_pauli(PureState& s, const PauliString& p);
// Full 2^n x 2^n row-major unitary.
void apply_dense_unitary(PureState& s, const std::vector<cd>& u);

Mat2 rz_matrix(double radians);
Mat2 h_matrix();

// <psi| P |psi>; imaginary part must vanish within 1e-10.
double expectation(const PureState& s, const PauliString& p);

struct MeasurementRecord {
    int qubit = 0;
    Basis basis;
    int outcome = 0;  // 0 <-> +, 1 <-> -
};

// P(outcome 0) for measuring qubit q in the given basis.
double prob_outcome0(const PureState& s, int q, const Basis& basis);

// Projective measurement; collapses in place (register size unchanged),
// qubit q ends in |+-_delta> (or |0>/|1> for the Z marker). u is a
// unit-uniform draw deciding the branch.
MeasurementRecord measure_in_basis(PureState& s, int q, const Basis& basis, double u);

// Computational-basis measurement of qubit q.
int measure_computational(PureState& s, int q, double u);

// Drops qubit q, which must be in the computational product state |outcome>
// (e.g. after a computational collapse). Throws if the residual is not
// normalized, i.e. the qubit was still entangled.
PureState remove_qubit(const PureState& s, int q, int outcome);

// Density operator, dim x dim row-major.
class MixedState {
  public:
    explicit MixedState(int num_qubits);
    static MixedState from_pure(const PureState& s);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(1) << n_; }
    cd entry(std::size_t r, std::size_t c) const { return m_[r * dim() + c]; }
    cd& entry(std::size_t r, std::size_t c) { return m_[r * dim() + c]; }

    double trace_real() const;
    double max_hermiticity_violation() const;
    double max_abs_diff(const MixedState& o) const;

    static MixedState maximally_mixed(int num_qubits);

  private:
    int n_ = 0;
    std::vector<cd> m_;
};

// sum_k w_k |psi_k><psi_k|; weights nonnegative, sum 1 within 1e-12.
MixedState average_density(const std::vector<PureState>& states,
                           const std::vector<double>& weights);

// Single-qubit reduced density matrix of qubit q.
MixedState reduced_density(const PureState& s, int q);

}  // namespace vbqc
