#include "arfkit/rochlin.hpp"

namespace arfkit {

namespace {

long long reduce_mod(long long v, int modulus) {
    long long r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

Residual make_residual(long long v, int modulus) {
    long long r = reduce_mod(v, modulus);
    return Residual{r, modulus, r == 0};
}

} // namespace

EvenPresentation::EvenPresentation(IntLattice l) : l_(std::move(l)) {
    if (!is_even(l_)) throw InputError("presentation must be an even form");
    if (!is_unimodular(l_)) throw InputError("presentation must be unimodular");
}

int mu_from_presentation(const EvenPresentation& p) {
    int sig = signature(p.lattice());
    if (sig % 8 != 0)
        throw InternalError("even unimodular form with signature not divisible by 8");
    return (sig / 8) & 1;
}

int mu_from_surgery(const SeifertData& knot, long long alpha) {
    if (knot.components() != 1) throw InputError("surgery formula needs a knot");
    int arf = arf_bit(arf_of_link(knot));
    return static_cast<int>(reduce_mod(alpha, 2)) * arf;
}

Residual verify_closed(long long sigma, long long xi_square, ArfValue arf, int ks) {
    if (!arf_is_finite(arf)) throw InputError("closed congruence needs a finite Arf value");
    long long diff = sigma - xi_square;
    if (diff % 8 != 0)
        throw InputError("sigma - xi^2 must be divisible by 8 for a characteristic surface");
    return make_residual(arf_bit(arf) - ks - diff / 8, 2);
}

Residual verify_closed_brown(long long sigma, long long f_dot_f, const BrownValue& beta, int ks) {
    if (!beta.is_finite()) throw InputError("closed congruence needs a finite Brown value");
    return make_residual(sigma - f_dot_f - 2 * beta.value() - 8 * ks, 16);
}

Residual verify_relative(const RelativeScenario& s) {
    if (s.family == ScenarioFamily::orientable) {
        if (!arf_is_finite(s.arf_f) || !arf_is_finite(s.arf_boundary))
            throw InputError("relative congruence needs finite Arf values");
        long long diff = s.sigma_x - s.f_square;
        if (diff % 8 != 0)
            throw InputError("sigma - F^2 must be divisible by 8 for a characteristic surface");
        return make_residual(
            arf_bit(s.arf_f) + arf_bit(s.arf_boundary) - diff / 8 - s.mu_boundary - s.ks, 2);
    }
    if (!s.beta_f.is_finite() || !s.beta_boundary.is_finite())
        throw InputError("relative congruence needs finite Brown values");
    return make_residual(2 * s.beta_f.value() + 2 * s.beta_boundary.value() - s.sigma_x +
                             s.f_square - 8 * s.mu_boundary - 8 * s.ks,
                         16);
}

RelativeScenario build_surgery_scenario(const SeifertData& knot, long long alpha) {
    if (knot.components() != 1) throw InputError("surgery scenario needs a knot");
    if (alpha != 1 && alpha != -1) throw InputError("surgery framing must be +1 or -1");
    int arf_k = arf_bit(arf_of_link(knot));

    RelativeScenario s;
    s.sigma_x = alpha;
    s.f_square = alpha;
    s.family = ScenarioFamily::orientable;
    s.arf_f = ArfValue::zero;
    s.arf_boundary = arf_from_bit(arf_k);
    s.ks = 0;
    // mu of the surgered sphere makes the congruence close:
    // 0 + Arf(K) - 0 - mu - 0 = 0 mod 2.
    s.mu_boundary = arf_k;

    if (s.mu_boundary != mu_from_surgery(knot, alpha))
        throw InternalError("surgery scenario disagrees with the surgery formula");
    if (!verify_relative(s).holds)
        throw InternalError("surgery scenario fails its own congruence");
    return s;
}

} // namespace arfkit
