#include "vbqc/detection.hpp"

#include <stdexcept>

namespace vbqc {

CommutationClass CommutationClass::from_index(int i) {
    if (i < 0 || i > 15) throw std::invalid_argument("class index must be in 0..15");
    CommutationClass c;
    c.anti = {(i & 8) != 0, (i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    return c;
}

CommutationClass CommutationClass::parse(const std::string& s) {
    if (s.size() != 4) throw std::invalid_argument("class pattern must have 4 letters");
    CommutationClass c;
    for (int i = 0; i < 4; ++i) {
        if (s[static_cast<std::size_t>(i)] == 'A') {
            c.anti[static_cast<std::size_t>(i)] = true;
        } else if (s[static_cast<std::size_t>(i)] == 'C') {
            c.anti[static_cast<std::size_t>(i)] = false;
        } else {
            throw std::invalid_argument("class letters are C or A");
        }
    }
    return c;
}

CommutationClass classify_pauli(const PauliString& p) {
    if (p.size() != 4) throw std::invalid_argument("commutation classes are defined on 4 qubits");
    CommutationClass c;
    for (int q = 0; q < 4; ++q) c.anti[static_cast<std::size_t>(q)] = p.flips_bit(q);
    return c;
}

const std::array<PauliString, kNumStabilizers>& trap_stabilizers() {
    static const std::array<PauliString, kNumStabilizers> s = {
        PauliString::parse("XIYY"),
        PauliString::parse("YXXY"),
        PauliString::parse("YYIX"),
    };
    return s;
}

const std::array<std::vector<int>, kNumStabilizers>& stabilizer_supports() {
    static const std::array<std::vector<int>, kNumStabilizers> s = {
        std::vector<int>{0, 2, 3},
        std::vector<int>{0, 1, 2, 3},
        std::vector<int>{0, 1, 3},
    };
    return s;
}

bool class_flips_support(const CommutationClass& cls, const std::vector<int>& support) {
    int parity = 0;
    for (int q : support) parity ^= cls.anti[static_cast<std::size_t>(q)] ? 1 : 0;
    return parity != 0;
}

bool harmless_class(const CommutationClass& cls) {
    return !cls.anti[1] && !cls.anti[2] && cls.anti[0] == cls.anti[3];
}

std::array<DetectionRow, 16> detection_table() {
    std::array<DetectionRow, 16> rows;
    const auto& supports = stabilizer_supports();
    for (int i = 0; i < 16; ++i) {
        DetectionRow& row = rows[static_cast<std::size_t>(i)];
        row.cls = CommutationClass::from_index(i);
        bool any = false;
        for (int k = 0; k < kNumStabilizers; ++k) {
            row.detected[static_cast<std::size_t>(k)] =
                class_flips_support(row.cls, supports[static_cast<std::size_t>(k)]);
            any = any || row.detected[static_cast<std::size_t>(k)];
        }
        row.harmless = !any;
    }
    return rows;
}

std::array<DetectionRow, 16> paper_detection_fixture() {
    // Transcribed check/cross grid; true = detected (a cross in the source table).
    struct Cell {
        const char* cls;
        bool d1, d2, d3;
        bool undetected_overall;
    };
    static const Cell cells[16] = {
        {"CCCC", false, false, false, true},
        {"CCCA", true, true, true, false},
        {"CCAC", true, true, false, false},
        {"CCAA", false, false, true, false},
        {"CACC", false, true, true, false},
        {"CACA", true, false, false, false},
        {"CAAC", true, false, true, false},
        {"CAAA", false, true, false, false},
        {"ACCC", true, true, true, false},
        {"ACCA", false, false, false, true},
        {"ACAC", false, false, true, false},
        {"ACAA", true, true, false, false},
        {"AACC", true, false, false, false},
        {"AACA", false, true, true, false},
        {"AAAC", false, true, false, false},
        {"AAAA", true, false, true, false},
    };
    std::array<DetectionRow, 16> rows;
    for (int i = 0; i < 16; ++i) {
        const Cell& c = cells[i];
        DetectionRow& row = rows[static_cast<std::size_t>(i)];
        row.cls = CommutationClass::parse(c.cls);
        row.detected = {c.d1, c.d2, c.d3};
        row.harmless = c.undetected_overall;
    }
    return rows;
}

}  // namespace vbqc
