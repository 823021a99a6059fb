#include "arfkit/f2.hpp"

#include <bit>

namespace arfkit {

F2Vector::F2Vector(int n) : n_(n) {
    if (n < 0 || n > kMaxDim) throw InputError("vector dimension out of range");
    w_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
}

bool F2Vector::get(int i) const {
    if (i < 0 || i >= n_) throw InputError("vector index out of range");
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

void F2Vector::set(int i, bool v) {
    if (i < 0 || i >= n_) throw InputError("vector index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        w_[static_cast<std::size_t>(i) >> 6] |= mask;
    else
        w_[static_cast<std::size_t>(i) >> 6] &= ~mask;
}

void F2Vector::flip(int i) { set(i, !get(i)); }

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (n_ != o.n_) throw InputError("vector size mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

bool F2Vector::is_zero() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

int F2Vector::popcount() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

int dot(const F2Vector& a, const F2Vector& b) {
    if (a.n_ != b.n_) throw InputError("vector size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
    return std::popcount(acc) & 1;
}

F2Vector unit_vector(int n, int i) {
    F2Vector v(n);
    v.set(i, true);
    return v;
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || rows > kMaxDim || cols < 0 || cols > kMaxDim)
        throw InputError("matrix dimensions out of range");
    r_.assign(static_cast<std::size_t>(rows), F2Vector(cols));
}

bool F2Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool F2Matrix::has_zero_diagonal() const {
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        if (get(i, i)) return false;
    return true;
}

int F2Matrix::pair(const F2Vector& x, const F2Vector& y) const {
    if (x.size() != rows_ || y.size() != cols_) throw InputError("pairing size mismatch");
    int acc = 0;
    for (int i = 0; i < rows_; ++i)
        if (x.get(i)) acc ^= dot(r_[static_cast<std::size_t>(i)], y);
    return acc;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
    if (x.size() != cols_) throw InputError("apply size mismatch");
    F2Vector out(rows_);
    for (int i = 0; i < rows_; ++i) out.set(i, dot(r_[static_cast<std::size_t>(i)], x));
    return out;
}

bool operator==(const F2Matrix& a, const F2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    F2Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1);
    }
    return m;
}

std::pair<F2Matrix, std::vector<int>> rref(const F2Matrix& m) {
    F2Matrix a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.get(i, col)) { p = i; break; }
        if (p < 0) continue;
        if (p != row) std::swap(a.row(p), a.row(row));
        for (int i = 0; i < a.rows(); ++i)
            if (i != row && a.get(i, col)) a.row(i) ^= a.row(row);
        pivots.push_back(col);
        ++row;
    }
    return {a, pivots};
}

int rank(const F2Matrix& m) { return static_cast<int>(rref(m).second.size()); }

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    auto [a, pivots] = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<F2Vector> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        F2Vector v(m.cols());
        v.set(free, true);
        // Back-substitute: pivot row r has its pivot at pivots[r].
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (a.get(static_cast<int>(r), free)) v.set(pivots[r], true);
        basis.push_back(v);
    }
    return basis;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw InputError("solve size mismatch");
    // Eliminate on the augmented matrix [m | b].
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.cols(), b.get(i));
    }
    auto [a, pivots] = rref(aug);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt;
    F2Vector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (a.get(static_cast<int>(r), m.cols())) x.set(pivots[r], true);
    return x;
}

std::vector<std::pair<F2Vector, F2Vector>> symplectic_basis(const F2Matrix& gram) {
    if (!gram.is_square() || !gram.is_symmetric())
        throw InputError("symplectic basis requires a symmetric square gram matrix");
    if (!gram.has_zero_diagonal())
        throw InputError("symplectic basis requires an alternating form (zero diagonal)");
    int n = gram.cols();
    if (rank(gram) != n) throw InputError("symplectic basis requires a nondegenerate form");

    std::vector<F2Vector> work;
    work.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) work.push_back(unit_vector(n, i));

    std::vector<std::pair<F2Vector, F2Vector>> pairs;
    while (!work.empty()) {
        F2Vector a = work.front();
        std::size_t bi = 0;
        bool found = false;
        for (std::size_t k = 1; k < work.size(); ++k) {
            if (gram.pair(a, work[k]) == 1) { bi = k; found = true; break; }
        }
        if (!found) throw InternalError("unpaired vector in nondegenerate alternating form");
        F2Vector b = work[bi];
        std::vector<F2Vector> rest;
        rest.reserve(work.size() - 2);
        for (std::size_t k = 1; k < work.size(); ++k) {
            if (k == bi) continue;
            F2Vector u = work[k];
            if (gram.pair(u, b)) u ^= a;
            if (gram.pair(u, a)) u ^= b;
            rest.push_back(u);
        }
        pairs.emplace_back(std::move(a), std::move(b));
        work = std::move(rest);
    }
    return pairs;
}

} // namespace arfkit
