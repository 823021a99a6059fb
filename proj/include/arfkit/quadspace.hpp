#pragma once

#include <cstdint>
#include <vector>

#include "arfkit/f2.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

// Quadratic space (V, ., q) over F2: the gram matrix of the bilinear form
// (symmetric, zero diagonal) together with q on the standard basis. q extends by
// q(x+y) = q(x) + q(y) + x.y, so the basis values determine it everywhere.
class QuadraticSpace {
public:
    QuadraticSpace(F2Matrix gram, std::vector<std::uint8_t> qvals);

    int dim() const { return gram_.cols(); }
    const F2Matrix& gram() const { return gram_; }
    const std::vector<std::uint8_t>& qvals() const { return qvals_; }

    int evaluate_q(const F2Vector& x) const;

    friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
        return a.gram_ == b.gram_ && a.qvals_ == b.qvals_;
    }

private:
    F2Matrix gram_;
    std::vector<std::uint8_t> qvals_;
};

struct QuadClass {
    int dim;
    int rad_dim;
    ArfValue arf;

    friend bool operator==(const QuadClass&, const QuadClass&) = default;
};

// Basis of the radical V^perp = ker(gram).
std::vector<F2Vector> radical(const QuadraticSpace& s);

// q restricted to the radical is linear; proper means it vanishes there.
bool is_proper(const QuadraticSpace& s);

// Arf via a symplectic basis of V/radical; infinity when improper.
ArfValue arf_symplectic(const QuadraticSpace& s);

// Arf by majority vote over all 2^dim values of q; infinity on a tie.
// Enumerations above the cap are rejected.
ArfValue arf_democratic(const QuadraticSpace& s, int enum_cap = kDefaultEnumCap);

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b);

// Complete isomorphism invariant (dim, dim of radical, Arf).
QuadClass classify(const QuadraticSpace& s);

} // namespace arfkit
