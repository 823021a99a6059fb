#pragma once

#include <random>
#include <vector>

#include "arfkit/seifert.hpp"

// Shared link presentations and generators for the test binaries.
namespace arfkit::fixtures {

inline IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<BigInt>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

inline SeifertData unknot() { return SeifertData(IntMatrix(0, 0), 1); }

inline SeifertData trefoil() { return SeifertData(int_matrix({{-1, 1}, {0, -1}}), 1); }

inline SeifertData figure_eight() { return SeifertData(int_matrix({{1, 1}, {0, -1}}), 1); }

// Hopf link with linking number +1 or -1; the annulus core is the single
// generator and its framing is the linking number.
inline SeifertData hopf(int sign) {
    return SeifertData(int_matrix({{sign}}), 2,
                       int_matrix({{0, sign}, {sign, 0}}));
}

// (2, 2k) torus link: chain Seifert matrix of the annular plumbing, two
// components with linking number k.
inline SeifertData torus_2_2k(int k) {
    int n = 2 * k - 1;
    IntMatrix v(n, n);
    for (int i = 0; i < n; ++i) {
        v.at(i, i) = -1;
        if (i + 1 < n) v.at(i, i + 1) = 1;
    }
    return SeifertData(std::move(v), 2, int_matrix({{0, k}, {k, 0}}));
}

// Borromean rings from the genus-one three-component surface of the standard
// braid closure; all pairwise linking numbers vanish.
inline SeifertData borromean() {
    return SeifertData(
        int_matrix({{-1, 1, 1, 0}, {0, -1, 0, 1}, {0, 1, 1, -1}, {0, 0, 0, 1}}),
        3, int_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
}

// Random genus-g knot Seifert matrix: V - V^T is the standard symplectic form,
// which keeps det(V + V^T) odd.
inline SeifertData random_knot(std::mt19937_64& rng, int g) {
    int n = 2 * g;
    IntMatrix j(n, n);
    for (int b = 0; b < g; ++b) {
        j.at(2 * b, 2 * b + 1) = 1;
        j.at(2 * b + 1, 2 * b) = -1;
    }
    IntMatrix v(n, n);
    for (int i = 0; i < n; ++i) {
        v.at(i, i) = static_cast<long long>(rng() % 9) - 4;
        for (int jj = i + 1; jj < n; ++jj) {
            v.at(i, jj) = static_cast<long long>(rng() % 9) - 4;
            v.at(jj, i) = v.at(i, jj) - j.at(i, jj);
        }
    }
    return SeifertData(std::move(v), 1);
}

// One stabilization move: enlarge by a dual pair of generators. Preserves the
// link and hence every link invariant.
inline SeifertData stabilize(const SeifertData& sd, std::mt19937_64& rng) {
    int n = sd.n();
    IntMatrix v(n + 2, n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v.at(i, j) = sd.v().at(i, j);
    for (int i = 0; i < n; ++i) v.at(i, n) = static_cast<long long>(rng() % 7) - 3;
    v.at(n, n) = static_cast<long long>(rng() % 7) - 3;
    v.at(n, n + 1) = 1;
    return SeifertData(std::move(v), sd.components(), sd.lk());
}

} // namespace arfkit::fixtures
