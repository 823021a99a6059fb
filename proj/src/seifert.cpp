#include "arfkit/seifert.hpp"

namespace arfkit {

SeifertData::SeifertData(IntMatrix v, int components, std::optional<IntMatrix> lk)
    : v_(std::move(v)), components_(components), lk_(std::move(lk)) {
    if (!v_.is_square()) throw InputError("Seifert matrix must be square");
    if (components_ < 1) throw InputError("component count must be positive");
    if (components_ == 1) {
        // det(v + v^T) odd, i.e. the mod-2 pairing is nondegenerate.
        F2Matrix g = (v_ + v_.transposed()).mod2();
        if (rank(g) != g.cols())
            throw InputError("knot Seifert matrix must have odd symmetrized determinant");
    }
    if (lk_) {
        if (lk_->rows() != components_ || lk_->cols() != components_)
            throw InputError("linking matrix must be components x components");
        if (!lk_->is_symmetric()) throw InputError("linking matrix must be symmetric");
        for (int i = 0; i < components_; ++i)
            if (lk_->at(i, i) != 0) throw InputError("linking matrix diagonal must vanish");
    }
}

SurfaceData::SurfaceData(F2Matrix gram, std::vector<std::uint8_t> evals, BigInt boundary_framing_sum)
    : gram_(std::move(gram)), evals_(std::move(evals)), framing_sum_(std::move(boundary_framing_sum)) {
    // Constructor of the enhancement validates symmetry and the diagonal congruence.
    EnhancedSpace check(gram_, evals_);
    if (boost::multiprecision::bit_test(framing_sum_, 0))
        throw InputError("boundary framing sum must be even");
}

QuadraticSpace quadratic_space_of(const SeifertData& sd) {
    F2Matrix g = (sd.v() + sd.v().transposed()).mod2();
    std::vector<std::uint8_t> q(static_cast<std::size_t>(sd.n()));
    for (int i = 0; i < sd.n(); ++i)
        q[static_cast<std::size_t>(i)] = boost::multiprecision::bit_test(sd.v().at(i, i), 0) ? 1 : 0;
    return QuadraticSpace(std::move(g), std::move(q));
}

ArfValue arf_of_link(const SeifertData& sd) { return arf_symplectic(quadratic_space_of(sd)); }

bool properness_of(const SeifertData& sd) {
    bool intrinsic = is_proper(quadratic_space_of(sd));
    if (sd.lk()) {
        // q of a component class is its linking number with the rest of the link,
        // so properness reads off the row-sum parities.
        bool rows_even = true;
        for (int i = 0; i < sd.components(); ++i) {
            BigInt row(0);
            for (int j = 0; j < sd.components(); ++j) row += sd.lk()->at(i, j);
            if (boost::multiprecision::bit_test(row, 0)) rows_even = false;
        }
        if (rows_even != intrinsic)
            throw InputError("linking matrix parity contradicts the Seifert matrix");
    }
    return intrinsic;
}

BigInt lk_total(const SeifertData& sd) {
    if (sd.components() == 1) return 0;
    if (!sd.lk()) throw InputError("multi-component data needs the linking matrix");
    BigInt s(0);
    for (int i = 0; i < sd.components(); ++i)
        for (int j = i + 1; j < sd.components(); ++j) s += sd.lk()->at(i, j);
    return s;
}

EnhancedSpace enhanced_space_of(const SurfaceData& surf) {
    return EnhancedSpace(surf.gram(), surf.evals());
}

namespace {

int mod8(const BigInt& v) {
    BigInt r = v % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r);
}

} // namespace

BrownValue beta_of_link(const SurfaceData& surf, int enum_cap) {
    EnhancedSpace s = enhanced_space_of(surf);
    BrownValue bs = brown_gauss(s, enum_cap);
    if (!bs.is_finite()) return BrownValue::infinity();
    BigInt phi = surf.boundary_framing_sum() / 2;
    return BrownValue::finite(bs.value() - mod8(phi));
}

SurfaceData surface_from_seifert(const SeifertData& sd) {
    QuadraticSpace qs = quadratic_space_of(sd);
    std::vector<std::uint8_t> evals(static_cast<std::size_t>(sd.n()));
    for (int i = 0; i < sd.n(); ++i)
        evals[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(2 * qs.qvals()[static_cast<std::size_t>(i)]);
    return SurfaceData(qs.gram(), std::move(evals), BigInt(-2) * lk_total(sd));
}

bool arf_beta_relation_check(const SeifertData& sd, const SurfaceData& surf, int enum_cap) {
    bool sd_proper = properness_of(sd);
    ArfValue arf = arf_of_link(sd);
    BrownValue beta = beta_of_link(surf, enum_cap);
    bool surf_proper = beta.is_finite();
    if (sd_proper != surf_proper)
        throw InputError("Seifert and surface data disagree about properness");
    if (!sd_proper) return true;
    BigInt lk = lk_total(sd);
    BigInt residual = BigInt(beta.value()) - 4 * arf_bit(arf) - lk;
    return residual % 8 == 0;
}

LinkInvariants link_invariants(const SeifertData& sd, const SurfaceData& surf, int enum_cap) {
    return LinkInvariants{arf_of_link(sd), beta_of_link(surf, enum_cap), properness_of(sd)};
}

} // namespace arfkit
