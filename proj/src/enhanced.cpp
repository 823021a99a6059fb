#include "arfkit/enhanced.hpp"

#include <array>
#include <bit>
#include <cstdlib>

namespace arfkit {

EnhancedSpace::EnhancedSpace(F2Matrix gram, std::vector<std::uint8_t> evals)
    : gram_(std::move(gram)), evals_(std::move(evals)) {
    if (!gram_.is_square()) throw InputError("gram matrix must be square");
    if (!gram_.is_symmetric()) throw InputError("gram matrix must be symmetric");
    if (static_cast<int>(evals_.size()) != gram_.cols())
        throw InputError("evals length must equal the dimension");
    for (auto v : evals_)
        if (v > 3) throw InputError("evals entries must lie in 0..3");
    for (int i = 0; i < gram_.cols(); ++i)
        if ((evals_[static_cast<std::size_t>(i)] & 1) != (gram_.get(i, i) ? 1 : 0))
            throw InputError("diagonal congruence violated: gram_ii must equal evals_i mod 2");
}

int EnhancedSpace::evaluate_e(const F2Vector& x) const {
    if (x.size() != dim()) throw InputError("evaluate_e size mismatch");
    int acc = 0;
    for (int i = 0; i < dim(); ++i) {
        if (!x.get(i)) continue;
        int cross = 0;
        for (int j = 0; j < i; ++j)
            if (x.get(j)) cross ^= gram_.get(j, i);
        acc = (acc + evals_[static_cast<std::size_t>(i)] + 2 * cross) & 3;
    }
    return acc;
}

std::vector<F2Vector> radical_e(const EnhancedSpace& s) { return kernel_basis(s.gram()); }

bool is_proper_e(const EnhancedSpace& s) {
    auto rad = radical_e(s);
    for (const auto& r : rad)
        if (s.evaluate_e(r)) return false;
    for (std::size_t i = 0; i < rad.size(); ++i)
        for (std::size_t j = i + 1; j < rad.size(); ++j)
            if (s.evaluate_e(rad[i] ^ rad[j])) return false;
    return true;
}

namespace {

std::array<long long, 4> value_counts(const EnhancedSpace& s, int enum_cap) {
    int n = s.dim();
    if (n > enum_cap) throw InputError("dimension exceeds the enumeration cap");
    std::array<long long, 4> counts{0, 0, 0, 0};
    counts[0] = 1; // e(0) = 0
    F2Vector x(n);
    int e = 0;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < total; ++g) {
        int k = std::countr_zero(g);
        // e(x + e_k) = e(x) + e(e_k) + 2(x . e_k)
        e = (e + s.evals()[static_cast<std::size_t>(k)] + 2 * dot(s.gram().row(k), x)) & 3;
        x.flip(k);
        ++counts[static_cast<std::size_t>(e)];
    }
    return counts;
}

int sgn(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

BrownValue brown_compass(const EnhancedSpace& s, int enum_cap) {
    if (!is_proper_e(s)) return BrownValue::infinity();
    auto c = value_counts(s, enum_cap);
    int u = sgn(c[0] - c[2]);
    int v = sgn(c[1] - c[3]);
    // Fixed compass on the sign pair (u, v); the eight directions in order.
    if (u > 0 && v == 0) return BrownValue::finite(0);
    if (u > 0 && v > 0) return BrownValue::finite(1);
    if (u == 0 && v > 0) return BrownValue::finite(2);
    if (u < 0 && v > 0) return BrownValue::finite(3);
    if (u < 0 && v == 0) return BrownValue::finite(4);
    if (u < 0 && v < 0) return BrownValue::finite(5);
    if (u == 0 && v < 0) return BrownValue::finite(6);
    if (u > 0 && v < 0) return BrownValue::finite(7);
    return BrownValue::infinity();
}

BrownValue brown_gauss(const EnhancedSpace& s, int enum_cap) {
    if (!is_proper_e(s)) return BrownValue::infinity();
    auto c = value_counts(s, enum_cap);
    // S = a + b i with a = e_0 - e_2, b = e_1 - e_3.
    long long a = c[0] - c[2];
    long long b = c[1] - c[3];
    if (a == 0 && b == 0) return BrownValue::infinity();
    if (b == 0) return BrownValue::finite(a > 0 ? 0 : 4);
    if (a == 0) return BrownValue::finite(b > 0 ? 2 : 6);
    // Off-axis S must lie on a diagonal; |S|^2 is a power of two.
    if (a != b && a != -b) throw InternalError("Gauss sum off the eighth-root rays");
    if (a > 0) return BrownValue::finite(b > 0 ? 1 : 7);
    return BrownValue::finite(b > 0 ? 3 : 5);
}

EnhancedSpace from_quadratic(const QuadraticSpace& s) {
    std::vector<std::uint8_t> evals(s.qvals().size());
    for (std::size_t i = 0; i < evals.size(); ++i)
        evals[i] = static_cast<std::uint8_t>(2 * s.qvals()[i]);
    return EnhancedSpace(s.gram(), std::move(evals));
}

EnhancedSpace direct_sum_e(const EnhancedSpace& a, const EnhancedSpace& b) {
    int n = a.dim(), m = b.dim();
    F2Matrix g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.set(i, j, a.gram().get(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.set(n + i, n + j, b.gram().get(i, j));
    std::vector<std::uint8_t> e(a.evals());
    e.insert(e.end(), b.evals().begin(), b.evals().end());
    return EnhancedSpace(std::move(g), std::move(e));
}

} // namespace arfkit
