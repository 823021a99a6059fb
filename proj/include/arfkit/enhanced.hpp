#pragma once

#include <cstdint>
#include <vector>

#include "arfkit/f2.hpp"
#include "arfkit/quadspace.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

// Z/4-valued enhancement e of a symmetric pairing: e(x+y) = e(x) + e(y) + 2(x.y).
// Setting y = x forces gram_ii = e(e_i) mod 2, so the pairing's diagonal is not
// free data; construction rejects violations.
class EnhancedSpace {
public:
    EnhancedSpace(F2Matrix gram, std::vector<std::uint8_t> evals);

    int dim() const { return gram_.cols(); }
    const F2Matrix& gram() const { return gram_; }
    const std::vector<std::uint8_t>& evals() const { return evals_; }

    int evaluate_e(const F2Vector& x) const;

    friend bool operator==(const EnhancedSpace& a, const EnhancedSpace& b) {
        return a.gram_ == b.gram_ && a.evals_ == b.evals_;
    }

private:
    F2Matrix gram_;
    std::vector<std::uint8_t> evals_;
};

std::vector<F2Vector> radical_e(const EnhancedSpace& s);

// e restricted to the radical is additive; proper means it vanishes there.
// Checks a radical basis and, defensively, all pairwise sums.
bool is_proper_e(const EnhancedSpace& s);

// Brown invariant from the value counts (e_0, e_1, e_2, e_3) over all 2^dim
// vectors, read off a fixed table on the signs of (e_0 - e_2, e_1 - e_3).
BrownValue brown_compass(const EnhancedSpace& s, int enum_cap = kDefaultEnumCap);

// Brown invariant via the exact Gauss sum S = sum over x of i^e(x): S = 0 gives
// infinity, otherwise S lies on one of the eight half-axes and the exponent is
// read from the sign pattern. Independent mapping logic from brown_compass.
BrownValue brown_gauss(const EnhancedSpace& s, int enum_cap = kDefaultEnumCap);

// Doubling: (V, ., 2q) is an enhanced space with the same gram matrix.
EnhancedSpace from_quadratic(const QuadraticSpace& s);

EnhancedSpace direct_sum_e(const EnhancedSpace& a, const EnhancedSpace& b);

} // namespace arfkit
