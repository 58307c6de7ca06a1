#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtwb/jsonio.hpp"
#include "qtwb/macdonald.hpp"

using namespace qtwb;

TEST_CASE("polynomial round trip") {
    QTPoly p;
    p.add_term(2, -1, Rat(3, 2));
    p.add_term(0, 0, -7);
    auto j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(poly_to_json(QTPoly())).is_zero());
}

TEST_CASE("rational round trip") {
    QTRat r = (QTRat(1) - QTRat::q(2) * QTRat::t(1)) /
              ((QTRat(1) - QTRat::q(1)) * (QTRat(1) - QTRat::t(3)));
    CHECK(qtrat_from_json(qtrat_to_json(r)) == r);
    CHECK(qtrat_from_json(qtrat_to_json(QTRat())).is_zero());
}

TEST_CASE("symmetric function round trip") {
    SymFunc f = tilde_H({2, 1});
    auto j = sf_to_json(f);
    CHECK(j["degree"] == 3);
    CHECK(sf_from_json(j) == f);
    SymFunc z = sf_zero(4, Basis::m);
    CHECK(sf_from_json(sf_to_json(z)) == z);
}

TEST_CASE("serialization is deterministic") {
    SymFunc f = tilde_H({2, 2});
    CHECK(sf_to_json(f).dump() == sf_to_json(tilde_H({2, 2})).dump());
}

TEST_CASE("latex emission mentions the right symbols") {
    std::string s = sf_latex(tilde_H({2}));
    CHECK(s.find("s_{") != std::string::npos);
    std::string r = qtrat_latex(QTRat::q(2) * QTRat::t(1));
    CHECK(r.find("q^{2}") != std::string::npos);
    CHECK(r.find("t") != std::string::npos);
}

TEST_CASE("hash function") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") != fnv1a("b"));
    CHECK(fnv1a("table") == fnv1a("table"));
}
