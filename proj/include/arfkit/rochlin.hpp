#pragma once

#include <cstdint>

#include "arfkit/lattice.hpp"
#include "arfkit/seifert.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

// Even unimodular presentation of a homology sphere's bounding form.
class EvenPresentation {
public:
    explicit EvenPresentation(IntLattice l);

    const IntLattice& lattice() const { return l_; }

    friend bool operator==(const EvenPresentation& a, const EvenPresentation& b) {
        return a.l_ == b.l_;
    }

private:
    IntLattice l_;
};

struct Residual {
    long long value; // reduced representative, 0 <= value < modulus
    int modulus;
    bool holds;

    friend bool operator==(const Residual&, const Residual&) = default;
};

enum class ScenarioFamily : std::uint8_t { orientable, nonorientable };

// One instance of the relative congruence: a 4-manifold signature, the square
// and normal data of an embedded surface, the boundary three-manifold's
// invariant, and the stable triangulation obstruction. The family tag selects
// which surface invariants are meaningful.
struct RelativeScenario {
    long long sigma_x = 0;
    long long f_square = 0;
    ScenarioFamily family = ScenarioFamily::orientable;
    ArfValue arf_f = ArfValue::zero;          // orientable
    ArfValue arf_boundary = ArfValue::zero;   // orientable
    BrownValue beta_f;                        // nonorientable
    BrownValue beta_boundary;                 // nonorientable
    int mu_boundary = 0;
    int ks = 0;

    friend bool operator==(const RelativeScenario&, const RelativeScenario&) = default;
};

// signature/8 mod 2; an even unimodular form always has signature divisible by 8,
// so a failure here is an internal error, not a verdict.
int mu_from_presentation(const EvenPresentation& p);

// Surgery on a knot with odd framing alpha: (alpha mod 2) * Arf(K).
// Multi-component data is rejected.
int mu_from_surgery(const SeifertData& knot, long long alpha);

// Closed congruence: Arf = KS + (sigma - xi_square)/8 mod 2.
// Non-divisibility by 8 is rejected as inconsistent input, distinct from a
// failing verdict.
Residual verify_closed(long long sigma, long long xi_square, ArfValue arf, int ks);

// Closed nonorientable congruence: sigma = F.F + 2*beta - 8*KS mod 16.
Residual verify_closed_brown(long long sigma, long long f_dot_f, const BrownValue& beta, int ks);

// Relative congruence. Orientable: Arf(F) + Arf(dF) = (sigma - F^2)/8 + mu + KS
// mod 2 (divisibility required). Nonorientable: 2*beta(F) + 2*beta(dF) =
// sigma - F.F + 8*mu + 8*KS mod 16.
Residual verify_relative(const RelativeScenario& s);

// The standard surgery trace for a knot with framing alpha in {-1, +1}: mirror
// the knot, cap the annulus with the 2-handle's core, and read the invariants
// off: sigma = alpha, F^2 = alpha, Arf(F) = 0, Arf(dF) = Arf(K), KS = 0, with
// mu of the boundary derived so the congruence closes. Cross-checked against
// mu_from_surgery.
RelativeScenario build_surgery_scenario(const SeifertData& knot, long long alpha);

} // namespace arfkit
