#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vbqc {

// Grid angle: an integer multiple of pi/4, reduced mod 2*pi.
// All protocol arithmetic (delta = theta + phi + pi*r) happens on the
// integer grid; radians only appear when amplitudes are built.
class Angle {
  public:
    constexpr Angle() = default;

    static constexpr Angle from_eighths(int e) {
        Angle a;
        a.eighths_ = ((e % 8) + 8) % 8;
        return a;
    }

    // Accepts only values within 1e-9 of a grid point.
    static Angle from_radians(double rad) {
        double e = rad / (std::numbers::pi / 4.0);
        double r = std::round(e);
        if (std::abs(e - r) > 1e-9) {
            throw std::invalid_argument("angle is not on the pi/4 grid");
        }
        return from_eighths(static_cast<int>(r));
    }

    constexpr int eighths() const { return eighths_; }
    double radians() const { return eighths_ * (std::numbers::pi / 4.0); }

    constexpr Angle operator+(Angle o) const { return from_eighths(eighths_ + o.eighths_); }
    constexpr Angle operator-(Angle o) const { return from_eighths(eighths_ - o.eighths_); }
    constexpr Angle operator-() const { return from_eighths(-eighths_); }
    constexpr bool operator==(Angle o) const { return eighths_ == o.eighths_; }
    constexpr bool operator!=(Angle o) const { return eighths_ != o.eighths_; }

    // pi, the r-bit offset in delta = theta + phi + pi*r.
    static constexpr Angle pi() { return from_eighths(4); }

    std::string str() const {
        static const char* names[8] = {"0",    "pi/4",  "pi/2",  "3pi/4",
                                       "pi",   "5pi/4", "3pi/2", "7pi/4"};
        return names[eighths_];
    }

  private:
    int eighths_ = 0;
};

// Measurement instruction for one qubit: an equatorial basis |+-_delta>,
// or the computational (sigma_z marker) basis. In the pattern view the
// Z marker is realized as the delta - theta = 0 choice.
struct Basis {
    bool z_marker = false;
    Angle delta;

    static Basis equatorial(Angle d) { return Basis{false, d}; }
    static Basis z() { return Basis{true, Angle{}}; }

    // Physical measurement angle used by the prover.
    Angle resolve(Angle theta) const { return z_marker ? theta : delta; }

    bool operator==(const Basis& o) const {
        return z_marker == o.z_marker && (z_marker || delta == o.delta);
    }
};

}  // namespace vbqc
