#include "arfkit/quadspace.hpp"

#include <bit>
#include <cstdint>

namespace arfkit {

QuadraticSpace::QuadraticSpace(F2Matrix gram, std::vector<std::uint8_t> qvals)
    : gram_(std::move(gram)), qvals_(std::move(qvals)) {
    if (!gram_.is_square()) throw InputError("gram matrix must be square");
    if (!gram_.is_symmetric()) throw InputError("gram matrix must be symmetric");
    if (!gram_.has_zero_diagonal())
        throw InputError("gram matrix must have zero diagonal (alternating pairing)");
    if (static_cast<int>(qvals_.size()) != gram_.cols())
        throw InputError("qvals length must equal the dimension");
    for (auto v : qvals_)
        if (v > 1) throw InputError("qvals entries must be 0 or 1");
}

int QuadraticSpace::evaluate_q(const F2Vector& x) const {
    if (x.size() != dim()) throw InputError("evaluate_q size mismatch");
    int acc = 0;
    for (int i = 0; i < dim(); ++i) {
        if (!x.get(i)) continue;
        acc ^= qvals_[static_cast<std::size_t>(i)];
        // Cross terms with earlier set bits: q(y + e_i) = q(y) + q(e_i) + y.e_i.
        for (int j = 0; j < i; ++j)
            if (x.get(j)) acc ^= gram_.get(j, i);
    }
    return acc;
}

std::vector<F2Vector> radical(const QuadraticSpace& s) { return kernel_basis(s.gram()); }

bool is_proper(const QuadraticSpace& s) {
    for (const auto& r : radical(s))
        if (s.evaluate_q(r)) return false;
    return true;
}

ArfValue arf_symplectic(const QuadraticSpace& s) {
    if (!is_proper(s)) return ArfValue::infinity;
    // Complement of the radical: coordinates at the pivot columns of the gram.
    auto pivots = rref(s.gram()).second;
    int r = static_cast<int>(pivots.size());
    F2Matrix sub(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.set(i, j, s.gram().get(pivots[static_cast<std::size_t>(i)], pivots[static_cast<std::size_t>(j)]));
    int acc = 0;
    for (const auto& [a, b] : symplectic_basis(sub)) {
        F2Vector fa(s.dim()), fb(s.dim());
        for (int i = 0; i < r; ++i) {
            if (a.get(i)) fa.flip(pivots[static_cast<std::size_t>(i)]);
            if (b.get(i)) fb.flip(pivots[static_cast<std::size_t>(i)]);
        }
        acc ^= s.evaluate_q(fa) & s.evaluate_q(fb);
    }
    return arf_from_bit(acc);
}

ArfValue arf_democratic(const QuadraticSpace& s, int enum_cap) {
    int n = s.dim();
    if (n > enum_cap) throw InputError("dimension exceeds the enumeration cap");
    // Gray-code walk: flipping bit k sends q(x) to q(x) + q(e_k) + x.row_k.
    std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t count1 = 0;
    F2Vector x(n);
    int q = 0;
    for (std::uint64_t g = 1; g < total; ++g) {
        int k = std::countr_zero(g & (~g + 1));
        q ^= s.qvals()[static_cast<std::size_t>(k)] ^ dot(s.gram().row(k), x);
        x.flip(k);
        count1 += static_cast<std::uint64_t>(q);
    }
    std::uint64_t count0 = total - count1;
    if (count0 > count1) return ArfValue::zero;
    if (count1 > count0) return ArfValue::one;
    return ArfValue::infinity;
}

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
    int n = a.dim(), m = b.dim();
    F2Matrix g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.set(i, j, a.gram().get(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.set(n + i, n + j, b.gram().get(i, j));
    std::vector<std::uint8_t> q(a.qvals());
    q.insert(q.end(), b.qvals().begin(), b.qvals().end());
    return QuadraticSpace(std::move(g), std::move(q));
}

QuadClass classify(const QuadraticSpace& s) {
    int rad = static_cast<int>(radical(s).size());
    if ((s.dim() - rad) % 2 != 0)
        throw InternalError("nondegenerate alternating quotient must have even dimension");
    return QuadClass{s.dim(), rad, arf_symplectic(s)};
}

} // namespace arfkit
