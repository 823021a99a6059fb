#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arfkit/enhanced.hpp"
#include "arfkit/intmat.hpp"
#include "arfkit/quadspace.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

// Seifert matrix of an oriented link: v_ij = lk(c_i^+, c_j) for a basis of
// surface curves, plus the component count and (optionally) the matrix of
// pairwise component linking numbers.
class SeifertData {
public:
    SeifertData(IntMatrix v, int components, std::optional<IntMatrix> lk = std::nullopt);

    const IntMatrix& v() const { return v_; }
    int n() const { return v_.rows(); }
    int components() const { return components_; }
    const std::optional<IntMatrix>& lk() const { return lk_; }

    friend bool operator==(const SeifertData& a, const SeifertData& b) {
        return a.v_ == b.v_ && a.components_ == b.components_ && a.lk_ == b.lk_;
    }

private:
    IntMatrix v_;
    int components_;
    std::optional<IntMatrix> lk_;
};

// Spanning-surface data reduced to algebra: Z/4 framings of a curve basis, the
// mod-2 intersection gram, and the total framing the surface induces on the
// link. Taken on trust as input; only internal consistency is enforced
// (diagonal congruence, even framing sum).
class SurfaceData {
public:
    SurfaceData(F2Matrix gram, std::vector<std::uint8_t> evals, BigInt boundary_framing_sum);

    const F2Matrix& gram() const { return gram_; }
    const std::vector<std::uint8_t>& evals() const { return evals_; }
    const BigInt& boundary_framing_sum() const { return framing_sum_; }

    friend bool operator==(const SurfaceData& a, const SurfaceData& b) {
        return a.gram_ == b.gram_ && a.evals_ == b.evals_ && a.framing_sum_ == b.framing_sum_;
    }

private:
    F2Matrix gram_;
    std::vector<std::uint8_t> evals_;
    BigInt framing_sum_;
};

struct LinkInvariants {
    ArfValue arf;
    BrownValue beta;
    bool proper;
};

// (v + v^T) mod 2 with q(c_i) = v_ii mod 2.
QuadraticSpace quadratic_space_of(const SeifertData& sd);

ArfValue arf_of_link(const SeifertData& sd);

// Intrinsic properness of the induced quadratic space. When lk is present each
// row-sum parity is cross-checked against the intrinsic answer; a mismatch
// means corrupt data and is rejected.
bool properness_of(const SeifertData& sd);

// Sum of linking numbers over unordered component pairs. Requires lk for
// multi-component data; a knot has none.
BigInt lk_total(const SeifertData& sd);

EnhancedSpace enhanced_space_of(const SurfaceData& surf);

// beta(L) = beta(S) - phi(S) with phi = boundary_framing_sum / 2; infinity for
// improper data.
BrownValue beta_of_link(const SurfaceData& surf, int enum_cap = kDefaultEnumCap);

// The surface data of the Seifert surface itself: framings 2*v_ii mod 4, the
// same mod-2 gram, and boundary framing sum -2*lk_total (each boundary
// component is framed by minus its linking number with the rest of the link).
SurfaceData surface_from_seifert(const SeifertData& sd);

// Checks beta(L) = 4*Arf(L) + lk(L) mod 8. Vacuously true when both sides are
// infinite; a finite/infinite mix is rejected as inconsistent input.
bool arf_beta_relation_check(const SeifertData& sd, const SurfaceData& surf,
                             int enum_cap = kDefaultEnumCap);

LinkInvariants link_invariants(const SeifertData& sd, const SurfaceData& surf,
                               int enum_cap = kDefaultEnumCap);

} // namespace arfkit
