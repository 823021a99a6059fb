#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arfkit {

// Malformed or inconsistent caller data. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; never a verdict and never the caller's fault.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Arf invariant of a quadratic refinement: 0, 1, or infinity for improper data.
enum class ArfValue : std::uint8_t { zero, one, infinity };

inline ArfValue arf_from_bit(int b) { return (b & 1) ? ArfValue::one : ArfValue::zero; }

inline bool arf_is_finite(ArfValue a) { return a != ArfValue::infinity; }

inline int arf_bit(ArfValue a) {
    if (!arf_is_finite(a)) throw InputError("Arf value is infinite");
    return a == ArfValue::one ? 1 : 0;
}

// Additive under orthogonal direct sum; infinity absorbs.
inline ArfValue arf_add(ArfValue a, ArfValue b) {
    if (!arf_is_finite(a) || !arf_is_finite(b)) return ArfValue::infinity;
    return arf_from_bit(arf_bit(a) ^ arf_bit(b));
}

inline std::string arf_to_string(ArfValue a) {
    switch (a) {
        case ArfValue::zero: return "0";
        case ArfValue::one: return "1";
        default: return "inf";
    }
}

// Brown invariant: a residue mod 8, or infinity for improper data.
class BrownValue {
public:
    BrownValue() : finite_(false), k_(0) {}
    static BrownValue finite(int k) {
        BrownValue b;
        b.finite_ = true;
        b.k_ = static_cast<std::uint8_t>(((k % 8) + 8) % 8);
        return b;
    }
    static BrownValue infinity() { return BrownValue(); }

    bool is_finite() const { return finite_; }
    int value() const {
        if (!finite_) throw InputError("Brown value is infinite");
        return k_;
    }

    friend bool operator==(const BrownValue& a, const BrownValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.k_ == b.k_;
    }
    friend bool operator!=(const BrownValue& a, const BrownValue& b) { return !(a == b); }

private:
    bool finite_;
    std::uint8_t k_;
};

inline BrownValue brown_add(const BrownValue& a, const BrownValue& b) {
    if (!a.is_finite() || !b.is_finite()) return BrownValue::infinity();
    return BrownValue::finite(a.value() + b.value());
}

inline std::string brown_to_string(const BrownValue& b) {
    return b.is_finite() ? std::to_string(b.value()) : "inf";
}

// Default cap on 2^dim enumerations (democratic Arf, Brown counts).
inline constexpr int kDefaultEnumCap = 24;

// Hard cap on dimensions accepted anywhere.
inline constexpr int kMaxDim = 4096;

} // namespace arfkit
