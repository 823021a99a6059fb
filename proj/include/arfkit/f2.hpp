#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arfkit/values.hpp"

namespace arfkit {

// Dense bit vector over F2.
class F2Vector {
public:
    F2Vector() : n_(0) {}
    explicit F2Vector(int n);

    int size() const { return n_; }
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);

    // In-place xor; sizes must agree.
    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

    bool is_zero() const;
    int popcount() const;

    friend bool operator==(const F2Vector& a, const F2Vector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const F2Vector& a, const F2Vector& b) { return !(a == b); }

    // Parity of the bitwise AND. Sizes must agree.
    friend int dot(const F2Vector& a, const F2Vector& b);

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

F2Vector unit_vector(int n, int i);

// Dense matrix over F2, a list of row vectors.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0) {}
    F2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return r_[i].get(j); }
    void set(int i, int j, bool v) { r_[i].set(j, v); }
    const F2Vector& row(int i) const { return r_[i]; }
    F2Vector& row(int i) { return r_[i]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool has_zero_diagonal() const;

    // Gram pairing x^T M y.
    int pair(const F2Vector& x, const F2Vector& y) const;

    // Matrix-vector product.
    F2Vector apply(const F2Vector& x) const;

    friend bool operator==(const F2Matrix& a, const F2Matrix& b);
    friend bool operator!=(const F2Matrix& a, const F2Matrix& b) { return !(a == b); }

    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

private:
    int rows_, cols_;
    std::vector<F2Vector> r_;
};

int rank(const F2Matrix& m);

// Reduced row echelon form plus the pivot column list (ascending).
std::pair<F2Matrix, std::vector<int>> rref(const F2Matrix& m);

// Basis of the right kernel, one vector per free column, ordered by free column.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

// A solution of m x = b, or nullopt when the system is inconsistent.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

// Symplectic basis (a_1,b_1),...,(a_g,b_g) of a nondegenerate alternating gram:
// pair(a_i,b_j) = delta_ij, pair(a_i,a_j) = pair(b_i,b_j) = 0.
// Greedy: lowest-index vector first, first partner found, Gram-Schmidt the rest
// against the extracted pair. Fully deterministic.
// Degenerate or non-alternating input is rejected.
std::vector<std::pair<F2Vector, F2Vector>> symplectic_basis(const F2Matrix& gram);

} // namespace arfkit
