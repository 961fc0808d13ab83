#include <doctest.h>

#include <cmath>

#include "vbqc/bell.hpp"
#include "vbqc/detection.hpp"

using namespace vbqc;

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

TEST_CASE("settings table matches the published rows") {
    const auto& rows = bell_settings();
    // (alpha, beta): theta (0, pi/2, 3pi/4, 0), delta (pi/2, -pi/2, 0, -pi/2)
    CHECK(rows[0].thetas == std::array<Angle, 4>{Angle::from_eighths(0), Angle::from_eighths(2),
                                                 Angle::from_eighths(3), Angle::from_eighths(0)});
    CHECK(rows[0].bases[0].delta == Angle::from_eighths(2));
    CHECK(rows[0].bases[1].delta == Angle::from_eighths(6));
    CHECK(rows[0].bases[2].delta == Angle::from_eighths(0));
    CHECK(rows[0].bases[3].delta == Angle::from_eighths(6));
    CHECK_FALSE(rows[0].relabel);

    // (alpha', beta'): theta (0, 0, pi/4, 0), delta (0, 0, 0, -pi/2); sigma_z marker on qubit 1
    CHECK(rows[3].thetas == std::array<Angle, 4>{Angle::from_eighths(0), Angle::from_eighths(0),
                                                 Angle::from_eighths(1), Angle::from_eighths(0)});
    CHECK(rows[3].bases[0].z_marker);
    CHECK(rows[3].bases[0].resolve(rows[3].thetas[0]) == Angle::from_eighths(0));
    CHECK(rows[3].bases[3].delta == Angle::from_eighths(6));

    // only the (alpha, beta') row carries the relabeling note
    CHECK(rows[1].relabel);
    CHECK_FALSE(rows[2].relabel);
    CHECK_FALSE(rows[3].relabel);

    // appendix angle relations: delta1 - theta1 in {0, pi/2}, delta3 - theta3
    // equal to beta or beta' (+pi on the relabeled row)
    for (const auto& row : rows) {
        Angle d1 = row.bases[0].resolve(row.thetas[0]);
        int a1 = (d1 - row.thetas[0]).eighths();
        CHECK((a1 == 0 || a1 == 2));
        Angle d3 = row.bases[2].resolve(row.thetas[2]);
        int b3 = (d3 - row.thetas[2]).eighths();  // beta = -3pi/4 -> 5, beta' = -pi/4 -> 7
        if (row.relabel) {
            CHECK(b3 == (7 + 4) % 8);
        } else {
            CHECK((b3 == 5 || b3 == 7));
        }
    }
}

TEST_CASE("exact correlations at the published settings") {
    const auto& rows = bell_settings();
    CHECK(exact_correlation(rows[0], Honest{}) == doctest::Approx(-kInvSqrt2).epsilon(1e-9));
    CHECK(exact_correlation(rows[1], Honest{}) == doctest::Approx(kInvSqrt2).epsilon(1e-9));
    CHECK(exact_correlation(rows[2], Honest{}) == doctest::Approx(-kInvSqrt2).epsilon(1e-9));
    CHECK(exact_correlation(rows[3], Honest{}) == doctest::Approx(-kInvSqrt2).epsilon(1e-9));
}

TEST_CASE("prepared logical state hits the published amplitudes") {
    // -delta4 + theta4 = pi/2 -> (|00> - i|01> + |10> + i|11>)/2
    PureState got = prepared_logical_state(Angle::from_eighths(0), Angle::from_eighths(6));
    PureState want =
        PureState::from_amplitudes(2, {cd{0.5, 0}, cd{0, -0.5}, cd{0.5, 0}, cd{0, 0.5}});
    CHECK(fidelity(got, want) == doctest::Approx(1.0).epsilon(1e-12));

    // product branches
    PureState p0 = prepared_logical_state(Angle::from_eighths(0), Angle::from_eighths(0));
    PureState w0 = tensor(make_blind_state(Angle::from_eighths(0)), PureState(1));
    CHECK(fidelity(p0, w0) == doctest::Approx(1.0).epsilon(1e-12));

    PureState p1 = prepared_logical_state(Angle::from_eighths(4), Angle::from_eighths(0));
    PureState one(1);
    apply_x(one, 0);
    PureState w1 = tensor(make_blind_state(Angle::from_eighths(0)), one);
    apply_cz(w1, 0, 1);
    CHECK(fidelity(p1, w1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chsh arithmetic") {
    auto fake = [](double e) {
        CorrelationEstimate c;
        c.E = e;
        c.stderr_E = 0.0;
        c.counts = {1, 0, 0, 0};
        return c;
    };
    auto tsirelson =
        chsh({fake(-kInvSqrt2), fake(kInvSqrt2), fake(-kInvSqrt2), fake(-kInvSqrt2)});
    CHECK(tsirelson.S == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));

    // a measured set of coefficients and its S value
    auto measured = chsh({fake(-0.540), fake(0.634), fake(-0.646), fake(-0.678)});
    CHECK(measured.S == doctest::Approx(2.498).epsilon(1e-12));

    auto flat = chsh({fake(0), fake(0), fake(0), fake(0)});
    CHECK(flat.S == doctest::Approx(0.0));
}

TEST_CASE("sampled correlations converge to the exact values") {
    Rng rng(555);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& row = bell_settings()[i];
        double exact = exact_correlation(row, Honest{});
        auto est = estimate_correlation(row, 100000, Honest{}, rng);
        CHECK(std::abs(est.E - exact) < 3 * est.stderr_E + 1e-6);
    }
}

TEST_CASE("relabeling the (alpha, beta') counts keeps E fixed") {
    Rng rng(556);
    const auto& row = bell_settings()[1];
    auto est = estimate_correlation(row, 20000, Honest{}, rng);
    // undo the documented swap 00<->11, 01<->10 by hand: E is symmetric
    std::array<std::uint64_t, 4> swapped = {est.counts[3], est.counts[2], est.counts[1],
                                            est.counts[0]};
    auto back = CorrelationEstimate::from_counts(swapped);
    CHECK(back.E == doctest::Approx(est.E).epsilon(1e-12));
}

TEST_CASE("acca invariance across the class, rejection outside it") {
    for (int idx = 0; idx < 256; ++idx) {
        PauliString p = PauliString::from_index(4, static_cast<std::uint64_t>(idx));
        if (!(classify_pauli(p) == CommutationClass::parse("ACCA"))) continue;
        for (const auto& row : bell_settings()) {
            INFO("pauli ", p.str(), " setting ", row.label_str());
            CHECK(acca_invariance_check(row, p));
        }
    }
    CHECK_THROWS_AS(acca_invariance_check(bell_settings()[0], PauliString::parse("XIII")),
                    std::invalid_argument);
}

TEST_CASE("product branch never violates the classical bound") {
    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<int, 4> te{};
        for (auto& e : te) e = static_cast<int>(rng.uniform_int(8));
        int d4 = te[3];  // -delta4 + theta4 = 0
        std::array<int, 2> d1pair = {static_cast<int>(rng.uniform_int(8)), 0};
        d1pair[1] = (d1pair[0] + 2) % 8;
        int d2 = static_cast<int>(rng.uniform_int(8));
        int d3 = static_cast<int>(rng.uniform_int(8));
        int d3p = (d3 + 1) % 8;

        auto make_row = [&](int d1, int dd3, bool alpha_row) {
            BellSetting s;
            s.label = alpha_row ? BellSetting::Label::AlphaBeta
                                : BellSetting::Label::AlphaPrimeBeta;
            for (int i = 0; i < 4; ++i)
                s.thetas[static_cast<std::size_t>(i)] = Angle::from_eighths(te[static_cast<std::size_t>(i)]);
            s.bases = {Basis::equatorial(Angle::from_eighths(d1)),
                       Basis::equatorial(Angle::from_eighths(d2)),
                       Basis::equatorial(Angle::from_eighths(dd3)),
                       Basis::equatorial(Angle::from_eighths(d4))};
            s.r_bits = {0, 0, 0, 0};
            s.relabel = false;
            return s;
        };
        double e1 = exact_correlation(make_row(d1pair[0], d3, true), Honest{});
        double e2 = exact_correlation(make_row(d1pair[0], d3p, true), Honest{});
        double e3 = exact_correlation(make_row(d1pair[1], d3, false), Honest{});
        double e4 = exact_correlation(make_row(d1pair[1], d3p, false), Honest{});
        double S = std::abs(e1 - e2) + std::abs(e3 + e4);
        CHECK(S <= 2.0 + 1e-9);
    }
}
