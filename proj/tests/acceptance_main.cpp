// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every numeric expectation here is either pinned from an independent source
// or cross-checked through a second algorithm inside this binary.

#include <complex>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arfkit/document.hpp"
#include "arfkit/lattice.hpp"
#include "arfkit/quadspace.hpp"
#include "arfkit/rochlin.hpp"
#include "arfkit/runner.hpp"
#include "arfkit/seifert.hpp"
#include "fixtures.hpp"

using namespace arfkit;
namespace fx = arfkit::fixtures;

namespace {

const std::string kGolden = ARFKIT_SOURCE_DIR "/data/golden/";
const std::string kMalformed = ARFKIT_SOURCE_DIR "/data/malformed/";

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

QuadraticSpace random_quadspace(std::mt19937_64& rng, int n) {
    F2Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool b = rng() & 1;
            g.set(i, j, b);
            g.set(j, i, b);
        }
    std::vector<std::uint8_t> q(n);
    for (auto& v : q) v = rng() & 1;
    return QuadraticSpace(std::move(g), std::move(q));
}

EnhancedSpace random_enhanced(std::mt19937_64& rng, int n) {
    std::vector<std::uint8_t> e(n);
    for (auto& v : e) v = rng() & 3;
    F2Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g.set(i, i, e[i] & 1);
        for (int j = i + 1; j < n; ++j) {
            bool b = rng() & 1;
            g.set(i, j, b);
            g.set(j, i, b);
        }
    }
    return EnhancedSpace(std::move(g), std::move(e));
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    int n = a.rows(), m = b.rows();
    IntMatrix q(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = a.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q.at(n + i, n + j) = b.at(i, j);
    return q;
}

IntMatrix random_basis_change(std::mt19937_64& rng, int n, int moves) {
    IntMatrix b = IntMatrix::identity(n);
    for (int step = 0; step < moves; ++step) {
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j) continue;
        if (rng() % 4 == 0) {
            for (int k = 0; k < n; ++k) std::swap(b.at(i, k), b.at(j, k));
        } else {
            long long c = (rng() % 2 == 0) ? 1 : -1;
            for (int k = 0; k < n; ++k) b.at(i, k) += c * b.at(j, k);
        }
    }
    return b;
}

// Criterion 1: the (dim, radical dim, Arf) triple separates exactly the
// GL(n, F2) orbits of quadratic spaces, exhaustively through dimension 3.
void criterion_classification() {
    for (int n = 1; n <= 3; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<QuadraticSpace> all;
        for (int gb = 0; gb < (1 << pairs); ++gb)
            for (int qb = 0; qb < (1 << n); ++qb) {
                F2Matrix g(n, n);
                int k = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++k) {
                        bool bit = (gb >> k) & 1;
                        g.set(i, j, bit);
                        g.set(j, i, bit);
                    }
                std::vector<std::uint8_t> q(n);
                for (int i = 0; i < n; ++i) q[i] = (qb >> i) & 1;
                all.emplace_back(std::move(g), std::move(q));
            }

        std::vector<F2Matrix> gl;
        for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
            F2Matrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.set(i, j, (bits >> (n * i + j)) & 1);
            if (rank(m) == n) gl.push_back(std::move(m));
        }

        auto isomorphic = [&](const QuadraticSpace& a, const QuadraticSpace& b) {
            for (const F2Matrix& m : gl) {
                std::vector<F2Vector> cols;
                for (int j = 0; j < n; ++j) {
                    F2Vector c(n);
                    for (int i = 0; i < n; ++i) c.set(i, m.get(i, j));
                    cols.push_back(std::move(c));
                }
                bool ok = true;
                for (int i = 0; i < n && ok; ++i)
                    for (int j = 0; j < n && ok; ++j)
                        ok = b.gram().pair(cols[i], cols[j]) ==
                             static_cast<int>(a.gram().get(i, j));
                for (int i = 0; i < n && ok; ++i)
                    ok = b.evaluate_q(cols[i]) == static_cast<int>(a.qvals()[i]);
                if (ok) return true;
            }
            return false;
        };

        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j)
                require(
                    (classify(all[i]) == classify(all[j])) == isomorphic(all[i], all[j]),
                    "classification mismatch in dim " + std::to_string(n));
    }
}

// Criterion 2: the structural algorithms agree with blind enumeration,
// both for Arf and for the Brown invariant.
void criterion_two_algorithms() {
    std::mt19937_64 rng(1002);
    for (int trial = 0; trial < 1000; ++trial) {
        QuadraticSpace s = random_quadspace(rng, 1 + static_cast<int>(rng() % 12));
        require(arf_symplectic(s) == arf_democratic(s), "Arf algorithms disagree");
    }
    for (int trial = 0; trial < 1000; ++trial) {
        EnhancedSpace s = random_enhanced(rng, 1 + static_cast<int>(rng() % 12));
        require(brown_compass(s) == brown_gauss(s), "Brown algorithms disagree");
    }
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int gb = 0; gb < (1 << pairs); ++gb)
            for (int qb = 0; qb < (1 << n); ++qb) {
                F2Matrix g(n, n);
                int k = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++k) {
                        bool bit = (gb >> k) & 1;
                        g.set(i, j, bit);
                        g.set(j, i, bit);
                    }
                std::vector<std::uint8_t> q(n);
                for (int i = 0; i < n; ++i) q[i] = (qb >> i) & 1;
                QuadraticSpace s(std::move(g), std::move(q));
                require(arf_symplectic(s) == arf_democratic(s),
                        "Arf algorithms disagree on an exhaustive case");
            }
    }
}

// Criterion 3: pinned invariants of the standard links.
void criterion_link_values() {
    require(arf_of_link(fx::unknot()) == ArfValue::zero, "Arf(unknot) != 0");
    require(arf_of_link(fx::trefoil()) == ArfValue::one, "Arf(trefoil) != 1");
    require(arf_of_link(fx::figure_eight()) == ArfValue::one, "Arf(figure-eight) != 1");
    require(arf_of_link(fx::hopf(1)) == ArfValue::infinity, "Arf(Hopf) != infinity");
    require(arf_of_link(fx::hopf(-1)) == ArfValue::infinity, "Arf(negative Hopf) != infinity");

    // Determinant criterion on the same matrices: |det(V+V^T)| mod 8.
    auto det_mod8 = [](const SeifertData& sd) {
        BigInt d = determinant(sd.v() + sd.v().transposed());
        if (d < 0) d = -d;
        return static_cast<int>(d % 8);
    };
    require(det_mod8(fx::unknot()) == 1, "det(unknot) mod 8");
    require(det_mod8(fx::trefoil()) == 3, "det(trefoil) mod 8");
    require(det_mod8(fx::figure_eight()) == 5, "det(figure-eight) mod 8");

    require(beta_of_link(surface_from_seifert(fx::borromean())) == BrownValue::finite(4),
            "beta(Borromean) != 4");
    EnhancedSpace generator(F2Matrix::from_rows({{1}}), {1});
    require(brown_gauss(generator) == BrownValue::finite(1), "beta of the +1 generator != 1");
}

// Criterion 4: beta(L) = 4*Arf(L) + lk(L) mod 8 across fixtures and random knots.
void criterion_relation() {
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 500; ++trial) {
        SeifertData k = fx::random_knot(rng, 1 + static_cast<int>(rng() % 4));
        require(arf_beta_relation_check(k, surface_from_seifert(k)),
                "relation fails on a random knot");
    }
    std::vector<SeifertData> links = {fx::unknot(), fx::trefoil(), fx::figure_eight(),
                                      fx::borromean(), fx::hopf(1), fx::hopf(-1)};
    for (int k = 1; k <= 6; ++k) links.push_back(fx::torus_2_2k(k));
    for (const SeifertData& l : links)
        require(arf_beta_relation_check(l, surface_from_seifert(l)),
                "relation fails on a fixture");
    // The sign of the framing correction is pinned by the (2,4) torus link.
    require(beta_of_link(surface_from_seifert(fx::torus_2_2k(2))) == BrownValue::finite(6),
            "beta(T(2,4)) != 6");
}

// Criterion 5: the characteristic congruence xi.xi = signature mod 8 on random
// unimodular forms, plus the pinned signature of the even generator.
void criterion_characteristic() {
    require(signature(e8_lattice()) == 8, "signature(E8) != 8");
    std::mt19937_64 rng(1005);
    std::vector<IntMatrix> pool = {IntMatrix::identity(1), e8_lattice().matrix(),
                                   hyperbolic_lattice().matrix()};
    IntMatrix minus(1, 1);
    minus.at(0, 0) = -1;
    pool.push_back(minus);
    for (int trial = 0; trial < 500; ++trial) {
        int target = 1 + static_cast<int>(rng() % 12);
        IntMatrix q(0, 0);
        int total = 0;
        bool first = true;
        while (total < target) {
            const IntMatrix& b = pool[rng() % pool.size()];
            q = first ? b : block_sum(q, b);
            first = false;
            total += b.rows();
        }
        IntMatrix bc = random_basis_change(rng, total, 3 * total);
        IntLattice l(bc * q * bc.transposed());
        require(is_unimodular(l), "pool sum is not unimodular");
        require(check_van_der_blij(l, characteristic_vector(l)),
                "characteristic congruence fails");
    }
}

// Criterion 6: mu is signature/8 mod 2 on presentations, additive, and matches
// the surgery formula through the scenario construction.
void criterion_mu() {
    require(mu_from_presentation(EvenPresentation(e8_lattice())) == 1, "mu(E8) != 1");
    require(mu_from_presentation(EvenPresentation(IntLattice(
                block_sum(e8_lattice().matrix(), e8_lattice().matrix())))) == 0,
            "mu(E8+E8) != 0");

    std::mt19937_64 rng(1006);
    IntMatrix neg_e8 = e8_lattice().matrix();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) neg_e8.at(i, j) = -neg_e8.at(i, j);
    std::vector<IntMatrix> pool = {e8_lattice().matrix(), neg_e8,
                                   hyperbolic_lattice().matrix()};
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix& a = pool[rng() % pool.size()];
        const IntMatrix& b = pool[rng() % pool.size()];
        int ma = mu_from_presentation(EvenPresentation(IntLattice(a)));
        int mb = mu_from_presentation(EvenPresentation(IntLattice(b)));
        IntMatrix sum = block_sum(a, b);
        IntMatrix bc = random_basis_change(rng, sum.rows(), 2 * sum.rows());
        int ms = mu_from_presentation(EvenPresentation(IntLattice(bc * sum * bc.transposed())));
        require(ms == (ma + mb) % 2, "mu is not additive");
    }

    for (int trial = 0; trial < 200; ++trial) {
        SeifertData k = fx::random_knot(rng, 1 + static_cast<int>(rng() % 4));
        long long alpha = (rng() % 2 == 0) ? 1 : -1;
        require(mu_from_surgery(k, alpha) == arf_bit(arf_of_link(k)),
                "surgery formula disagrees with Arf");
        require(build_surgery_scenario(k, alpha).mu_boundary == mu_from_surgery(k, alpha),
                "scenario mu disagrees with the surgery formula");
    }
}

// Criterion 7: the relative congruence is self-consistent: surgery scenarios
// hold, trivial boundaries reduce to the closed case, and retagging an
// orientable scenario as a doubled nonorientable one keeps the verdict.
void criterion_relative() {
    std::mt19937_64 rng(1007);
    for (int trial = 0; trial < 200; ++trial) {
        SeifertData k = fx::random_knot(rng, 1 + static_cast<int>(rng() % 4));
        long long alpha = (rng() % 2 == 0) ? 1 : -1;
        require(verify_relative(build_surgery_scenario(k, alpha)).holds,
                "surgery scenario fails its congruence");
    }
    for (int trial = 0; trial < 200; ++trial) {
        long long f2 = 8 * (static_cast<long long>(rng() % 5) - 2);
        long long sigma = f2 + 8 * (static_cast<long long>(rng() % 5) - 2);
        ArfValue arf = arf_from_bit(static_cast<int>(rng() % 2));
        int ks = static_cast<int>(rng() % 2);
        RelativeScenario s;
        s.sigma_x = sigma;
        s.f_square = f2;
        s.arf_f = arf;
        s.ks = ks;
        require(verify_relative(s).holds == verify_closed(sigma, f2, arf, ks).holds,
                "closed degeneration disagrees");
    }
    for (int trial = 0; trial < 200; ++trial) {
        long long f2 = static_cast<long long>(rng() % 9) - 4;
        RelativeScenario o;
        o.sigma_x = f2 + 8 * (static_cast<long long>(rng() % 5) - 2);
        o.f_square = f2;
        o.arf_f = arf_from_bit(static_cast<int>(rng() % 2));
        o.arf_boundary = arf_from_bit(static_cast<int>(rng() % 2));
        o.mu_boundary = static_cast<int>(rng() % 2);
        o.ks = static_cast<int>(rng() % 2);
        RelativeScenario n = o;
        n.family = ScenarioFamily::nonorientable;
        n.beta_f = BrownValue::finite(4 * arf_bit(o.arf_f));
        n.beta_boundary = BrownValue::finite(4 * arf_bit(o.arf_boundary));
        require(verify_relative(o).holds == verify_relative(n).holds,
                "doubled retagging changes the verdict");
    }
}

// Criterion 8: the CLI reproduces the frozen reports byte for byte, twice,
// and rejects every malformed input with status 2.
void criterion_cli() {
    struct Case {
        std::vector<std::string> args;
        std::string expected;
    };
    const std::vector<Case> cases = {
        {{"arf", kGolden + "unknot.json"}, "Arf = 0\n"},
        {{"arf", kGolden + "trefoil.json"}, "Arf = 1\n"},
        {{"arf", kGolden + "figure_eight.json"}, "Arf = 1\n"},
        {{"arf", kGolden + "hopf.json"}, "Arf = ∞ (link not proper)\n"},
        {{"arf", kGolden + "borromean.json"}, "Arf = 1\n"},
        {{"arf", kGolden + "hyperbolic_quadspace.json"}, "Arf = 1\n"},
        {{"brown", kGolden + "generator_enhanced.json"}, "beta = 1\n"},
        {{"brown", kGolden + "borromean_surface.json"},
         "beta_surface = 4\nphi = 0\nbeta = 4\n"},
        {{"brown", kGolden + "mobius_plus.json"}, "beta_surface = 1\nphi = 1\nbeta = 0\n"},
        {{"classify", kGolden + "borromean.json"}, "dim = 4\nradical = 2\nArf = 1\n"},
        {{"signature", kGolden + "e8.json"}, "signature = 8\nunimodular = yes\neven = yes\n"},
        {{"charvec", kGolden + "e8.json"},
         "xi = (0, 0, 0, 0, 0, 0, 0, 0)\nxi_square = 0\nsignature = 8\nvan_der_blij = holds\n"},
        {{"mu", kGolden + "poincare.json"}, "mu = 1\n"},
        {{"surgery-mu", "--alpha", "1", kGolden + "trefoil.json"},
         "alpha = 1\nArf = 1\nmu = 1\n"},
        {{"verify-relative", kGolden + "trefoil_scenario.json"},
         "residual = 0 (mod 2)\nverdict = holds\n"},
        {{"relation-check", kGolden + "borromean.json", kGolden + "borromean_surface.json"},
         "Arf = 1\nbeta = 4\nlk = 0\nresidual = 0 (mod 8)\nverdict = holds\n"},
    };
    for (const Case& c : cases) {
        for (int pass = 0; pass < 2; ++pass) {
            std::ostringstream out, err;
            int status = run(c.args, out, err);
            require(status == 0, "status " + std::to_string(status) + " for " + c.args[0] +
                                     " on " + c.args.back());
            require(out.str() == c.expected,
                    "report drifted for " + c.args[0] + " on " + c.args.back() + ": got \"" +
                        out.str() + "\"");
        }
    }

    namespace fs = std::filesystem;
    int malformed = 0;
    for (const auto& entry : fs::directory_iterator(kMalformed)) {
        ++malformed;
        for (const char* cmd : {"arf", "classify"}) {
            std::ostringstream out, err;
            int status = run({cmd, entry.path().string()}, out, err);
            require(status == 2, "malformed input not rejected: " + entry.path().string());
            require(!err.str().empty(),
                    "no diagnostic for malformed input: " + entry.path().string());
        }
    }
    require(malformed >= 10, "fewer than ten malformed inputs on disk");
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {"classification triple is a complete invariant (exhaustive, dim <= 3)",
         criterion_classification},
        {"independent Arf and Brown algorithms agree (random + exhaustive)",
         criterion_two_algorithms},
        {"pinned invariants of the standard links and spaces", criterion_link_values},
        {"beta = 4*Arf + lk (mod 8) across fixtures and random knots", criterion_relation},
        {"characteristic congruence mod 8 on random unimodular forms", criterion_characteristic},
        {"mu: signature/8 mod 2, additivity, surgery formula", criterion_mu},
        {"relative congruence: surgery scenarios, closed degeneration, retagging",
         criterion_relative},
        {"CLI: frozen byte-identical reports, malformed inputs rejected", criterion_cli},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].body();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.what;
            ++failures;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("unexpected exception: ") + e.what();
            ++failures;
        }
        std::cout << verdict << "  " << (i + 1) << ". " << criteria[i].label;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
