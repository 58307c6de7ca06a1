// End-to-end acceptance checks. One line per criterion: PASS/FAIL plus a
// short description and timing. Exit status 0 only if everything passes.
#include "qtwb/bh.hpp"
#include "qtwb/orbit.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace qtwb;
using Clock = std::chrono::steady_clock;

static int failures = 0;

static void run(int id, const std::string& what,
                const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " — "
              << what << " (" << secs << "s)"
              << (detail.empty() ? "" : " [" + detail + "]") << "\n";
    std::cout.flush();
    if (!ok) ++failures;
}

static QTRat Q(long e) { return QTRat::q(e); }
static QTRat T(long e) { return QTRat::t(e); }

int main() {
    run(1, "tables to degree 6: positivity, q=t=1, duality, conjugation",
        [](std::string& d) {
            for (int n = 1; n <= 6; ++n)
                for (auto& mu : partitions_of(n)) {
                    SymFunc h = tilde_H(mu);
                    if (!(flip_char(mu, h) == h)) {
                        d = "duality fails at " + part_str(mu);
                        return false;
                    }
                    for (auto& lam : partitions_of(n)) {
                        QTRat k = h.coeff(lam);
                        std::string w;
                        if (!k.is_positive_integral(&w)) {
                            d = part_str(lam) + "," + part_str(mu) + ": " + w;
                            return false;
                        }
                        if (k.substitute(1, 1) != Rat(f_lambda(lam))) {
                            d = "q=t=1 count fails at " + part_str(lam) + "," +
                                part_str(mu);
                            return false;
                        }
                        if (!(k.swap_vars() == ktilde(lam, conjugate(mu)))) {
                            d = "conjugation fails at " + part_str(lam) + "," +
                                part_str(mu);
                            return false;
                        }
                    }
                }
            return true;
        });

    run(2, "t=1 specialization equals the table column, degree <= 6",
        [](std::string& d) {
            for (int n = 1; n <= 6; ++n)
                for (auto& mu : partitions_of(n)) {
                    SymFunc r1 = to_schur_full(tilde_H(mu));
                    SymFunc sub = sf_zero(n, Basis::s);
                    for (auto& [lam, c] : r1.coeffs) sub.add(lam, c.sub_t(1));
                    if (!(to_basis(specialize_t1(mu), Basis::s) == sub)) {
                        d = part_str(mu);
                        return false;
                    }
                }
            return true;
        });

    run(3, "two corner interpolation fixture for (3,2), both routes",
        [](std::string& d) {
            SymFunc expect = sf_zero(4, Basis::s);
            expect.add({4}, QTRat(1));
            expect.add({3, 1}, T(1) + Q(1));
            expect.add({2, 1, 1}, Q(1) * T(1));
            expect.add({2, 2}, Q(2));
            if (!(phi_mu({3, 2}) == expect)) {
                d = "interpolation route";
                return false;
            }
            if (!(butler_split({3, 1}, {2, 2}) == expect)) {
                d = "covering pair route";
                return false;
            }
            return true;
        });

    run(4, "three corner fixtures for (3,2,1)", [](std::string& d) {
        SymFunc full = sf_zero(5, Basis::s); // the all-ones display
        full.add({5}, QTRat(1));
        full.add({4, 1}, T(1) + Q(1));
        full.add({3, 2}, T(2) + T(1) * Q(1) + Q(2));
        full.add({3, 1, 1}, T(1) * Q(1));
        full.add({2, 2, 1}, Q(1) * T(2) + T(1) * Q(2));
        if (!(phi_k({3, 2, 1}, 3) == full)) {
            d = "all-ones value";
            return false;
        }
        SymFunc two = sf_zero(5, Basis::s); // the 110 display, times T_3
        two.add({4, 1}, Q(2));
        two.add({3, 1, 1}, Q(2) * (T(1) + Q(1)));
        two.add({2, 1, 1, 1}, Q(3) * T(1));
        if (!(phi_k({3, 2, 1}, 2) == T_corner({3, 2, 1}, 3) * two)) {
            d = "two-ones value";
            return false;
        }
        return true;
    });

    run(5, "restriction: four routes agree for all shapes of size <= 6",
        [](std::string& d) {
            for (int n = 1; n <= 6; ++n)
                for (auto& mu : partitions_of(n)) {
                    SymFunc lhs = del_p1(tilde_H(mu));
                    if (!(lhs == pieri_del_p1(mu)) ||
                        !(lhs == pieri_phi_expansion(mu)) ||
                        !(lhs == bh_reassemble(mu))) {
                        d = part_str(mu);
                        return false;
                    }
                }
            return true;
        });

    run(6, "corner e-differences polynomial and positive to size 8",
        [](std::string& d) {
            for (int n = 1; n <= 8; ++n)
                for (auto& mu : partitions_of(n)) {
                    if (!(b_mu_k(mu, 1) == B_mu(mu))) {
                        d = "k=1 mismatch at " + part_str(mu);
                        return false;
                    }
                    int m = (int)corners(mu).size();
                    for (int k = 1; k <= m + 1; ++k) {
                        std::string w;
                        if (!b_mu_k(mu, k).is_positive_integral(&w)) {
                            d = part_str(mu) + " k=" + std::to_string(k) + ": " + w;
                            return false;
                        }
                    }
                }
            return true;
        });

    run(7, "positivity audit clean for sizes up to 6", [](std::string& d) {
        for (int n = 1; n <= 5; ++n) {
            auto v = positivity_audit(n);
            if (!v.empty()) {
                d = v.front().what;
                return false;
            }
        }
        return true;
    });

    run(8, "dimension limits n!/|S| to size 7; partial fraction lemma",
        [](std::string& d) {
            for (int sz = 2; sz <= 7; ++sz)
                for (auto& mu : partitions_of(sz)) {
                    int n = sz - 1;
                    int m = (int)corners(mu).size();
                    for (unsigned mask = 1; mask < (1u << m); ++mask) {
                        CornerSet S;
                        for (int i = 0; i < m; ++i)
                            if (mask & (1u << i)) S.push_back(i + 1);
                        if (sf_dimension_limit(mu, S) !=
                            Rat(factorial(n)) / (long)S.size()) {
                            d = part_str(mu);
                            return false;
                        }
                    }
                }
            std::mt19937 rng(2026);
            for (int k = 1; k <= 4; ++k)
                for (int rep = 0; rep < 3; ++rep) {
                    std::set<long> ys;
                    while ((int)ys.size() < k) {
                        long y = (long)(rng() % 23) - 11;
                        if (y != 0) ys.insert(y);
                    }
                    std::vector<long> v(ys.begin(), ys.end());
                    if (partial_fraction_limit_check(v) != Rat(1, k)) {
                        d = "k=" + std::to_string(k);
                        return false;
                    }
                }
            return true;
        });

    run(9, "orbit modules: dimension n! to size 5; characteristics",
        [](std::string& d) {
            for (int n = 1; n <= 5; ++n)
                for (auto& mu : partitions_of(n))
                    if (Int(space_dim(derivative_module(mu))) != factorial(n)) {
                        d = "dim at " + part_str(mu);
                        return false;
                    }
            for (int n = 1; n <= 4; ++n)
                for (auto& mu : partitions_of(n))
                    if (!(bigraded_frobenius(derivative_module(mu)) ==
                          tilde_H(mu))) {
                        d = "characteristic at " + part_str(mu);
                        return false;
                    }
            for (Partition mu : {Partition{3, 2}, Partition{3, 1, 1}})
                if (!(bigraded_frobenius(derivative_module(mu)) == tilde_H(mu))) {
                    d = "characteristic at " + part_str(mu);
                    return false;
                }
            return true;
        });

    run(10, "intersection modules: pair of size 4 and triple of size 5",
        [](std::string& d) {
            Space m31 = derivative_module({3, 1});
            Space m22 = derivative_module({2, 2});
            Space v = space_intersect(m31, m22);
            if (space_dim(v) != 12) {
                d = "pair dimension";
                return false;
            }
            if (!(bigraded_frobenius(v) == phi_mu({3, 2}))) {
                d = "pair characteristic";
                return false;
            }
            if (!space_eq(flip_space(v, {2, 2}), ortho_complement_in(v, m22))) {
                d = "flip against (2,2)";
                return false;
            }
            if (!space_eq(flip_space(v, {3, 1}), ortho_complement_in(v, m31))) {
                d = "flip against (3,1)";
                return false;
            }
            Space w = space_intersect(
                space_intersect(derivative_module({3, 2}),
                                derivative_module({3, 1, 1})),
                derivative_module({2, 2, 1}));
            if (space_dim(w) != 40) {
                d = "triple dimension";
                return false;
            }
            if (!(bigraded_frobenius(w) == phi_k({3, 2, 1}, 3))) {
                d = "triple characteristic";
                return false;
            }
            return true;
        });

    run(11, "covering pair reconstruction and flip symmetry, size <= 6",
        [](std::string& d) {
            for (int n = 2; n <= 6; ++n)
                for (auto& [lo, hi] : minimal_raising_pairs(n)) {
                    auto c = butler_check(lo, hi);
                    if (!c.ok()) {
                        d = part_str(lo) + " < " + part_str(hi);
                        return false;
                    }
                }
            return true;
        });

    run(12, "difference operator eigenrelation, size <= 5", [](std::string& d) {
        QTRat M = (QTRat(1) - T(1)) * (QTRat(1) - Q(1));
        for (int n = 1; n <= 5; ++n)
            for (auto& mu : partitions_of(n))
                if (!(delta_diff(tilde_H(mu)) == (M * B_mu(mu)) * tilde_H(mu))) {
                    d = part_str(mu);
                    return false;
                }
        return true;
    });

    run(13, "rectangle recursion for the graded dimension series",
        [](std::string& d) {
            for (int r = 1; r <= 6; ++r)
                for (int s = 1; r * s <= 6; ++s) {
                    Partition mu(s, r);
                    Partition pre(s - 1, r);
                    if (r > 1) pre.push_back(r - 1);
                    QTRat lhs = hilbert_poly(tilde_H(mu));
                    QTRat rhs = B_mu(mu) * hilbert_poly(tilde_H(pre));
                    if (!(lhs == rhs)) {
                        d = part_str(mu);
                        return false;
                    }
                }
            return true;
        });

    std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) +
                                 " criteria)"
                           : "ACCEPTANCE: PASS (13/13)")
              << "\n";
    return failures ? 1 : 0;
}
