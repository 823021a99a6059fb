#pragma once

#include <cstdint>
#include <vector>

#include "arfkit/intmat.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

// Nondegenerate symmetric integer bilinear form (checked lazily: symmetry at
// construction, nondegeneracy where an operation needs it).
class IntLattice {
public:
    explicit IntLattice(IntMatrix q);

    int n() const { return q_.rows(); }
    const IntMatrix& matrix() const { return q_; }
    const BigInt& entry(int i, int j) const { return q_.at(i, j); }

    friend bool operator==(const IntLattice& a, const IntLattice& b) { return a.q_ == b.q_; }

private:
    IntMatrix q_;
};

// Mod-2 vector certifying xi . x = x . x (mod 2) for all x; entries kept in {0,1}.
struct CharVector {
    std::vector<std::uint8_t> xi;

    friend bool operator==(const CharVector&, const CharVector&) = default;
};

// Signature by exact rational congruence diagonalization. A zero diagonal block
// with a nonzero off-diagonal entry is handled by adding row+column j into i,
// which makes the diagonal entry 2*q_ij. Degenerate forms are rejected.
int signature(const IntLattice& l);

// |det| = 1, determinant taken fraction-free over the integers.
bool is_unimodular(const IntLattice& l);

// Every diagonal entry even; equivalently x . x is even for all x.
bool is_even(const IntLattice& l);

// The unique mod-2 characteristic vector of a unimodular form: solves
// Q xi = diag(Q) over F2 (the mod-2 reduction of Q is invertible since det is odd).
CharVector characteristic_vector(const IntLattice& l);

// Exact check of the congruence xi.xi = signature (mod 8) for a characteristic
// vector of a unimodular form. Non-characteristic xi is rejected.
bool check_van_der_blij(const IntLattice& l, const CharVector& xi);

// Square xi.xi = xi^T Q xi as an exact integer.
BigInt char_square(const IntLattice& l, const CharVector& xi);

// The E8 form: even, unimodular, signature 8.
IntLattice e8_lattice();

// Hyperbolic plane [[0,1],[1,0]].
IntLattice hyperbolic_lattice();

} // namespace arfkit
