#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "arfkit/f2.hpp"
#include "arfkit/values.hpp"

namespace arfkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j);
    const BigInt& at(int i, int j) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix transposed() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    F2Matrix mod2() const;

    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static IntMatrix identity(int n);

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

} // namespace arfkit
