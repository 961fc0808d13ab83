#include <doctest.h>

#include "vbqc/detection.hpp"

using namespace vbqc;

TEST_CASE("classify_pauli maps letters to C/A per position") {
    CHECK(classify_pauli(PauliString::parse("IIII")).str() == "CCCC");
    CHECK(classify_pauli(PauliString::parse("XIIX")).str() == "ACCA");
    CHECK(classify_pauli(PauliString::parse("ZXYI")).str() == "CAAC");
    CHECK(classify_pauli(PauliString::parse("YZZY")).str() == "ACCA");
    CHECK_THROWS_AS(classify_pauli(PauliString::parse("XI")), std::invalid_argument);
}

TEST_CASE("every class contains exactly 16 strings") {
    std::array<int, 16> counts{};
    for (int idx = 0; idx < 256; ++idx) {
        auto cls = classify_pauli(PauliString::from_index(4, static_cast<std::uint64_t>(idx)));
        counts[static_cast<std::size_t>(cls.index())]++;
    }
    for (int c : counts) CHECK(c == 16);
}

TEST_CASE("computed detection table equals the transcribed fixture in all 48 cells") {
    auto computed = detection_table();
    auto fixture = paper_detection_fixture();
    for (int i = 0; i < 16; ++i) {
        const auto& c = computed[static_cast<std::size_t>(i)];
        const auto& f = fixture[static_cast<std::size_t>(i)];
        CHECK(c.cls.str() == f.cls.str());
        for (int k = 0; k < kNumStabilizers; ++k) {
            INFO("class ", c.cls.str(), " stabilizer ", k);
            CHECK(c.detected[static_cast<std::size_t>(k)] == f.detected[static_cast<std::size_t>(k)]);
        }
        CHECK(c.harmless == f.harmless);
    }
}

TEST_CASE("three named rows of the table") {
    auto table = detection_table();
    auto row = [&](const std::string& cls) {
        return table[static_cast<std::size_t>(CommutationClass::parse(cls).index())];
    };
    // CCCC passes everything and is harmless
    CHECK(row("CCCC").detected == std::array<bool, 3>{false, false, false});
    CHECK(row("CCCC").harmless);
    // ACCA passes everything yet flips bits (the undetectable class)
    CHECK(row("ACCA").detected == std::array<bool, 3>{false, false, false});
    CHECK(row("ACCA").harmless);
    // CCCA is caught by every stabilizer
    CHECK(row("CCCA").detected == std::array<bool, 3>{true, true, true});
    CHECK_FALSE(row("CCCA").harmless);
}

TEST_CASE("exhaustive 256-string scan: undetected set is exactly CCCC union ACCA") {
    int undetected = 0;
    for (int idx = 0; idx < 256; ++idx) {
        auto p = PauliString::from_index(4, static_cast<std::uint64_t>(idx));
        auto cls = classify_pauli(p);
        bool flips_none = true;
        for (const auto& sup : stabilizer_supports()) {
            if (class_flips_support(cls, sup)) flips_none = false;
        }
        CHECK(flips_none == harmless_class(cls));
        if (flips_none) undetected++;
    }
    CHECK(undetected == 32);
}

TEST_CASE("stabilizer supports match the non-identity letters") {
    const auto& stabs = trap_stabilizers();
    const auto& sups = stabilizer_supports();
    for (int k = 0; k < kNumStabilizers; ++k) {
        std::vector<int> letters;
        for (int q = 0; q < 4; ++q) {
            if (stabs[static_cast<std::size_t>(k)].letter(q) != Pauli::I) letters.push_back(q);
        }
        CHECK(letters == sups[static_cast<std::size_t>(k)]);
    }
}
