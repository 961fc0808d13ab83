#pragma once

#include <array>
#include <string>
#include <vector>

#include "vbqc/pauli.hpp"

namespace vbqc {

// C/A pattern of a 4-qubit Pauli string: per position, C when the letter
// commutes with the computational-basis measurement (I, Z), A when it
// anticommutes (X, Y). 16 strings share each class.
struct CommutationClass {
    std::array<bool, 4> anti{};  // true = A

    int index() const {
        return (anti[0] << 3) | (anti[1] << 2) | (anti[2] << 1) | static_cast<int>(anti[3]);
    }
    std::string str() const {
        std::string s;
        for (bool a : anti) s.push_back(a ? 'A' : 'C');
        return s;
    }
    static CommutationClass from_index(int i);
    static CommutationClass parse(const std::string& s);
    bool operator==(const CommutationClass& o) const { return anti == o.anti; }
};

CommutationClass classify_pauli(const PauliString& p);  // length 4 required

// The three trap stabilizer measurements, in a fixed column order:
// X(x)I(x)Y(x)Y, Y(x)X(x)X(x)Y, Y(x)Y(x)I(x)X.
constexpr int kNumStabilizers = 3;
const std::array<PauliString, kNumStabilizers>& trap_stabilizers();
const std::array<std::vector<int>, kNumStabilizers>& stabilizer_supports();  // 0-based

// A deviation class flips the parity measured on a support iff it has an odd
// number of A positions inside the support.
bool class_flips_support(const CommutationClass& cls, const std::vector<int>& support);

struct DetectionRow {
    CommutationClass cls;
    std::array<bool, kNumStabilizers> detected{};  // true = this stabilizer catches it
    bool harmless = false;  // leaves every check and the computation parity alone
};

// Computed from the anticommutation parity rule. Row i corresponds to class
// index i (CCCC first, AAAA last).
std::array<DetectionRow, 16> detection_table();

// Independently transcribed reference grid (check mark = passes the trap),
// kept as a fixture for the diff commands and tests.
std::array<DetectionRow, 16> paper_detection_fixture();

// CCCC (no error) or ACCA (simultaneous bit flip on qubits 1 and 4 only,
// invisible to the traps and harmless to parity-decoded outputs).
bool harmless_class(const CommutationClass& cls);

}  // namespace vbqc
