#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtwb/partition.hpp"

using namespace qtwb;

TEST_CASE("conjugate and n statistic") {
    CHECK(conjugate({3, 2}) == Partition{2, 2, 1});
    CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});
    CHECK(n_stat({3, 2}) == 2);
    CHECK(n_stat({2, 2, 1}) == 4);
    CHECK(n_stat({}) == 0);
}

TEST_CASE("partition enumeration refines dominance") {
    auto ps = partitions_of(6);
    CHECK(ps.size() == 11);
    CHECK(ps.front() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(ps.back() == Partition{6});
    // listed order is a linear extension of dominance
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < i; ++j) CHECK(!dominates_leq(ps[i], ps[j]));
}

TEST_CASE("dominance covers") {
    auto pairs = minimal_raising_pairs(4);
    // chain 1111 < 211 < 22 < 31 < 4: exactly 4 covers
    CHECK(pairs.size() == 4);
    for (auto& [lo, hi] : pairs) {
        CHECK(dominates_leq(lo, hi));
        CHECK(lo != hi);
    }
    auto p6 = minimal_raising_pairs(6);
    bool incomparable_excluded = true;
    for (auto& [lo, hi] : p6)
        if ((lo == Partition{3, 1, 1, 1} && hi == Partition{2, 2, 2}) ||
            (lo == Partition{2, 2, 2} && hi == Partition{3, 1, 1, 1}))
            incomparable_excluded = false;
    CHECK(incomparable_excluded);
}

TEST_CASE("arms legs coarms colegs") {
    // mu = (4,3,1), cell in row 1 col 2 (bottom row)
    auto h = arms_legs({4, 3, 1}, 1, 2);
    CHECK(h.arm == 2);
    CHECK(h.leg == 1);
    CHECK(h.coarm == 1);
    CHECK(h.coleg == 0);
    CHECK_THROWS_AS(arms_legs({4, 3, 1}, 3, 2), std::out_of_range);
}

TEST_CASE("corners ordered from the top row") {
    auto cs = corners({3, 2, 1});
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].row == 3);
    CHECK(cs[0].coarm == 0);
    CHECK(cs[0].coleg == 2);
    CHECK(cs[1].coarm == 1);
    CHECK(cs[1].coleg == 1);
    CHECK(cs[2].coarm == 2);
    CHECK(cs[2].coleg == 0);
    // coarms strictly increase, colegs strictly decrease
    for (size_t i = 1; i < cs.size(); ++i) {
        CHECK(cs[i].coarm > cs[i - 1].coarm);
        CHECK(cs[i].coleg < cs[i - 1].coleg);
    }
}

TEST_CASE("predecessors") {
    CHECK(predecessor({3, 2, 1}, 0) == Partition{3, 2});
    CHECK(predecessor({3, 2, 1}, 1) == Partition{3, 1, 1});
    CHECK(predecessor({3, 2, 1}, 2) == Partition{2, 2, 1});
    CHECK(predecessor({1}, 0) == Partition{});
}

TEST_CASE("T weight") {
    CHECK(T_mu({3, 2, 1}) == QTRat::mono(1, 4, 4));
    CHECK(T_mu({1}) == QTRat(1));
    // T of a predecessor equals T_mu over the corner weight
    for (int i = 1; i <= 3; ++i)
        CHECK(T_corner({3, 2, 1}, i) == T_mu(predecessor({3, 2, 1}, i - 1)));
}

TEST_CASE("corner weights multiply up consistently") {
    for (Partition mu : {Partition{3, 2, 1}, Partition{4, 4, 2}, Partition{2, 1},
                         Partition{5}, Partition{2, 2, 1, 1}}) {
        int m = (int)corners(mu).size();
        QTRat px = x_weight(mu, 0), pu = u_weight(mu, 0);
        for (int i = 1; i <= m; ++i) {
            px *= x_weight(mu, i);
            pu *= u_weight(mu, i);
        }
        CHECK(px == pu);
        // (1-1/t)(1-1/q) B_mu = sum x - sum u
        QTRat sx = x_weight(mu, 0), su = u_weight(mu, 0);
        for (int i = 1; i <= m; ++i) sx += x_weight(mu, i);
        for (int i = 1; i <= m; ++i) su += u_weight(mu, i);
        QTRat M = (QTRat(1) - QTRat::t(-1)) * (QTRat(1) - QTRat::q(-1));
        CHECK(M * B_mu(mu) == sx - su);
    }
}

TEST_CASE("B and hook products") {
    CHECK(B_mu({2, 1}) == QTRat(QTPoly(1) + QTPoly::mono(1, 1, 0) +
                                QTPoly::mono(1, 0, 1)));
    auto hp = hook_products({2});
    // cells (1,1): a=1,l=0 ; (1,2): a=0,l=0
    CHECK(hp.h == one_minus(1, 1) * one_minus(0, 1));
    CHECK(hp.hp == one_minus(2, 0) * one_minus(1, 0));
}

TEST_CASE("string form") { CHECK(part_str({3, 1}) == "(3,1)"); }
