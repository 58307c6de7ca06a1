#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtwb/symfunc.hpp"

using namespace qtwb;

TEST_CASE("character table values") {
    const auto& tb = tables(3);
    auto at = [&](const Partition& lam, const Partition& rho) {
        return tb.chi[tb.index.at(lam)][tb.index.at(rho)];
    };
    CHECK(at({3}, {1, 1, 1}) == 1);
    CHECK(at({3}, {2, 1}) == 1);
    CHECK(at({3}, {3}) == 1);
    CHECK(at({2, 1}, {1, 1, 1}) == 2);
    CHECK(at({2, 1}, {2, 1}) == 0);
    CHECK(at({2, 1}, {3}) == -1);
    CHECK(at({1, 1, 1}, {2, 1}) == -1);
    CHECK(at({1, 1, 1}, {3}) == 1);
}

TEST_CASE("z and factorial and f_lambda") {
    CHECK(z_of({2, 1}) == 2);
    CHECK(z_of({1, 1, 1}) == 6);
    CHECK(z_of({3}) == 3);
    CHECK(factorial(5) == 120);
    CHECK(f_lambda({2, 2}) == 2);
    CHECK(f_lambda({3, 2}) == 5);
    CHECK(f_lambda({2, 1, 1}) == 3);
}

TEST_CASE("basis conversion round trips") {
    for (int n = 1; n <= 5; ++n)
        for (auto b1 : {Basis::m, Basis::e, Basis::h, Basis::s})
            for (auto& mu : partitions_of(n)) {
                SymFunc f = sf_elem(b1, mu);
                for (auto b2 : {Basis::p, Basis::m, Basis::s})
                    CHECK(to_basis(to_basis(f, b2), b1) == f);
            }
}

TEST_CASE("classical expansions") {
    // h2 = s2, e2 = s11, p2 = s2 - s11
    SymFunc h2 = to_basis(sf_elem(Basis::h, {2}), Basis::s);
    CHECK(h2.coeff({2}) == QTRat(1));
    CHECK(h2.coeff({1, 1}).is_zero());
    SymFunc e2 = to_basis(sf_elem(Basis::e, {2}), Basis::s);
    CHECK(e2.coeff({1, 1}) == QTRat(1));
    SymFunc p2 = to_basis(sf_elem(Basis::p, {2}), Basis::s);
    CHECK(p2.coeff({2}) == QTRat(1));
    CHECK(p2.coeff({1, 1}) == QTRat(-1));
    // h3 = s3 + ... no: h3 = s3 exactly; h21 = s3 + s21
    SymFunc h21 = to_basis(sf_elem(Basis::h, {2, 1}), Basis::s);
    CHECK(h21.coeff({3}) == QTRat(1));
    CHECK(h21.coeff({2, 1}) == QTRat(1));
    CHECK(h21.coeff({1, 1, 1}).is_zero());
}

TEST_CASE("hall inner product") {
    for (auto& lam : partitions_of(4))
        for (auto& mu : partitions_of(4)) {
            QTRat v = hall_inner(sf_elem(Basis::s, lam), sf_elem(Basis::s, mu));
            CHECK(v == (lam == mu ? QTRat(1) : QTRat()));
        }
    // <h_mu, m_lam> = delta
    CHECK(hall_inner(sf_elem(Basis::h, {2, 1}), sf_elem(Basis::m, {2, 1})) ==
          QTRat(1));
    CHECK(hall_inner(sf_elem(Basis::h, {2, 1}), sf_elem(Basis::m, {1, 1, 1}))
              .is_zero());
}

TEST_CASE("qt inner product is diagonal on p") {
    SymFunc p21 = sf_elem(Basis::p, {2, 1});
    SymFunc p111 = sf_elem(Basis::p, {1, 1, 1});
    CHECK(qt_inner(p21, p111).is_zero());
    QTRat expect = QTRat(2) * (one_minus(2, 0) / one_minus(0, 2)) *
                   (one_minus(1, 0) / one_minus(0, 1));
    CHECK(qt_inner(p21, p21) == expect);
}

TEST_CASE("omega and down arrow") {
    for (auto& lam : partitions_of(4)) {
        SymFunc w = to_basis(omega(sf_elem(Basis::s, lam)), Basis::s);
        CHECK(w.coeff(conjugate(lam)) == QTRat(1));
        CHECK(w.coeffs.size() == 1);
    }
    SymFunc f = QTRat::q(1) * sf_elem(Basis::s, {2, 1});
    SymFunc d = to_basis(down_arrow(f), Basis::s);
    CHECK(d.coeff({2, 1}) == QTRat::q(-1));
}

TEST_CASE("del_p1 restricts degree") {
    // del_p1 s_lam = sum of s_nu over nu = lam minus one corner
    SymFunc d = del_p1(to_basis(sf_elem(Basis::s, {3, 1}), Basis::p));
    SymFunc ds = to_basis(d, Basis::s);
    CHECK(ds.coeff({3}) == QTRat(1));
    CHECK(ds.coeff({2, 1}) == QTRat(1));
    CHECK(ds.coeff({1, 1, 1}).is_zero());
    // p1^n -> n p1^(n-1)
    SymFunc p3 = sf_elem(Basis::p, {1, 1, 1});
    CHECK(del_p1(p3).coeff({1, 1}) == QTRat(3));
}

TEST_CASE("hilbert series of a characteristic") {
    // for s_lam the graded dimension is f_lambda
    CHECK(hilbert_poly(sf_elem(Basis::s, {2, 2})) == QTRat(2));
    SymFunc f = QTRat::q(2) * sf_elem(Basis::s, {3, 1});
    CHECK(hilbert_poly(f) == QTRat(3) * QTRat::q(2));
}

TEST_CASE("multiplication") {
    // s1 * s1 = s2 + s11
    SymFunc s1 = sf_elem(Basis::s, {1});
    SymFunc prod = to_basis(sf_mul(s1, s1), Basis::s);
    CHECK(prod.coeff({2}) == QTRat(1));
    CHECK(prod.coeff({1, 1}) == QTRat(1));
    // s21 * s1 pieri
    SymFunc s21 = sf_elem(Basis::s, {2, 1});
    SymFunc pr = to_basis(sf_mul(s21, s1), Basis::s);
    CHECK(pr.coeff({3, 1}) == QTRat(1));
    CHECK(pr.coeff({2, 2}) == QTRat(1));
    CHECK(pr.coeff({2, 1, 1}) == QTRat(1));
    CHECK(pr.coeff({4}).is_zero());
}

TEST_CASE("plethystic reweighting") {
    // f[rX] with r = constant 2 on p_k: p_k -> 2 p_k
    SymFunc p22 = sf_elem(Basis::p, {2, 2});
    SymFunc g = plethysm_scalar(p22, QTRat(2));
    CHECK(g.coeff({2, 2}) == QTRat(4));
    // r = q: p_k picks up q^k
    SymFunc h = plethysm_scalar(p22, QTRat::q(1));
    CHECK(h.coeff({2, 2}) == QTRat::q(4));
}

TEST_CASE("equality across bases") {
    SymFunc a = sf_elem(Basis::h, {2, 1});
    SymFunc b = to_basis(a, Basis::s);
    CHECK(a == b);
    CHECK(!(a == sf_elem(Basis::h, {3})));
}
