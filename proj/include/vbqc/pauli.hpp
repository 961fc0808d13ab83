#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbqc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

inline Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

// Tensor product of single-qubit Paulis, one letter per qubit.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

    static PauliString identity(int n) {
        return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
    }

    static PauliString parse(const std::string& s) {
        std::vector<Pauli> ls;
        ls.reserve(s.size());
        for (char c : s) ls.push_back(pauli_from_char(c));
        return PauliString(std::move(ls));
    }

    int size() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int q) const { return letters_.at(static_cast<std::size_t>(q)); }
    const std::vector<Pauli>& letters() const { return letters_; }

    bool is_identity() const {
        for (Pauli p : letters_)
            if (p != Pauli::I) return false;
        return true;
    }

    // Letters that flip a computational-basis bit.
    bool flips_bit(int q) const {
        Pauli p = letter(q);
        return p == Pauli::X || p == Pauli::Y;
    }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (Pauli p : letters_) s.push_back(pauli_char(p));
        return s;
    }

    bool operator==(const PauliString& o) const { return letters_ == o.letters_; }

    // Enumeration helper: index in 0 .. 4^n-1, base-4 digits, qubit 0 most significant.
    static PauliString from_index(int n, std::uint64_t idx) {
        std::vector<Pauli> ls(static_cast<std::size_t>(n));
        for (int q = n - 1; q >= 0; --q) {
            ls[static_cast<std::size_t>(q)] = static_cast<Pauli>(idx & 3u);
            idx >>= 2;
        }
        return PauliString(std::move(ls));
    }

  private:
    std::vector<Pauli> letters_;
};

}  // namespace vbqc
