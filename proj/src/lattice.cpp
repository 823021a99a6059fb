#include "arfkit/lattice.hpp"

namespace arfkit {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || rows > kMaxDim || cols < 0 || cols > kMaxDim)
        throw InputError("matrix dimensions out of range");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

BigInt& IntMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("matrix index out of range");
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

const BigInt& IntMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("matrix index out of range");
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix size mismatch");
    IntMatrix s(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
    return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix size mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return p;
}

F2Matrix IntMatrix::mod2() const {
    F2Matrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, boost::multiprecision::bit_test(at(i, j), 0));
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt determinant(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("determinant requires a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: the previous pivot divides exactly.
                a.at(i, j) = t / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntLattice::IntLattice(IntMatrix q) : q_(std::move(q)) {
    if (!q_.is_square()) throw InputError("lattice matrix must be square");
    if (!q_.is_symmetric()) throw InputError("lattice matrix must be symmetric");
}

int signature(const IntLattice& l) {
    int n = l.n();
    std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(n),
                                       std::vector<BigRat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = BigRat(l.entry(i, j));

    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int dp = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0) { dp = i; break; }
            if (dp >= 0) {
                std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(dp)]);
                for (int i = 0; i < n; ++i)
                    std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], a[static_cast<std::size_t>(i)][static_cast<std::size_t>(dp)]);
            } else {
                // All remaining diagonal entries vanish: congruence-add some row
                // and column j into k to expose 2*q_kj on the diagonal.
                int op = -1;
                for (int j = k + 1; j < n && op < 0; ++j)
                    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0) op = j;
                if (op < 0) {
                    // Row k of the remaining block is zero entirely.
                    bool all_zero = true;
                    for (int i = k; i < n && all_zero; ++i)
                        for (int j = k; j < n && all_zero; ++j)
                            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) all_zero = false;
                    throw InputError(all_zero ? "degenerate form: signature undefined"
                                              : "degenerate form: isolated null vector");
                }
                for (int j = 0; j < n; ++j)
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(op)][static_cast<std::size_t>(j)];
                for (int i = 0; i < n; ++i)
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(op)];
            }
        }
        const BigRat piv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        sig += piv > 0 ? 1 : -1;
        for (int i = k + 1; i < n; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == 0) continue;
            BigRat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / piv;
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= f * a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
    }
    return sig;
}

bool is_unimodular(const IntLattice& l) {
    BigInt d = determinant(l.matrix());
    return d == 1 || d == -1;
}

bool is_even(const IntLattice& l) {
    for (int i = 0; i < l.n(); ++i)
        if (boost::multiprecision::bit_test(l.entry(i, i), 0)) return false;
    return true;
}

CharVector characteristic_vector(const IntLattice& l) {
    if (!is_unimodular(l)) throw InputError("characteristic vector requires a unimodular form");
    int n = l.n();
    F2Matrix m = l.matrix().mod2();
    F2Vector b(n);
    for (int i = 0; i < n; ++i) b.set(i, boost::multiprecision::bit_test(l.entry(i, i), 0));
    auto x = solve(m, b);
    if (!x) throw InternalError("mod-2 reduction of a unimodular form must be invertible");
    CharVector cv;
    cv.xi.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cv.xi[static_cast<std::size_t>(i)] = x->get(i) ? 1 : 0;
    return cv;
}

BigInt char_square(const IntLattice& l, const CharVector& xi) {
    if (static_cast<int>(xi.xi.size()) != l.n()) throw InputError("characteristic vector length mismatch");
    BigInt s(0);
    for (int i = 0; i < l.n(); ++i) {
        if (!xi.xi[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < l.n(); ++j)
            if (xi.xi[static_cast<std::size_t>(j)]) s += l.entry(i, j);
    }
    return s;
}

bool check_van_der_blij(const IntLattice& l, const CharVector& xi) {
    if (static_cast<int>(xi.xi.size()) != l.n()) throw InputError("characteristic vector length mismatch");
    if (!is_unimodular(l)) throw InputError("congruence check requires a unimodular form");
    for (auto v : xi.xi)
        if (v > 1) throw InputError("characteristic vector entries must be 0 or 1");
    // xi must actually be characteristic: (Q xi)_i = Q_ii mod 2 on the basis.
    for (int i = 0; i < l.n(); ++i) {
        BigInt row(0);
        for (int j = 0; j < l.n(); ++j)
            if (xi.xi[static_cast<std::size_t>(j)]) row += l.entry(i, j);
        if (boost::multiprecision::bit_test(row - l.entry(i, i), 0))
            throw InputError("vector is not characteristic for this form");
    }
    BigInt diff = char_square(l, xi) - signature(l);
    return diff % 8 == 0;
}

IntLattice e8_lattice() {
    // Root basis: a chain of eight nodes 0..6 with node 7 attached to node 4.
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i) m.at(i, i) = 2;
    for (int i = 0; i + 1 < 7; ++i) { m.at(i, i + 1) = -1; m.at(i + 1, i) = -1; }
    m.at(7, 4) = -1; m.at(4, 7) = -1;
    return IntLattice(std::move(m));
}

IntLattice hyperbolic_lattice() {
    IntMatrix m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    return IntLattice(std::move(m));
}

} // namespace arfkit
