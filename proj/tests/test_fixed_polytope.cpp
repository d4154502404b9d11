#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "eep/combinatorics.hpp"
#include "eep/errors.hpp"
#include "eep/fixed_polytope.hpp"

using namespace eep;

namespace {

SetPartition sp(std::vector<std::vector<int>> blocks) {
    return SetPartition{std::move(blocks)};
}

IntPoly poly(std::vector<mpz_class> lowest_first) {
    return IntPoly(std::move(lowest_first));
}

}  // namespace

TEST_CASE("lambda compatibility on small examples") {
    const auto l211 = CycleType::of({2, 1, 1});
    CHECK(is_lambda_compatible(l211, SetPartition::whole(3)));   // has odd parts
    CHECK_FALSE(is_lambda_compatible(l211, sp({{1}, {2}, {3}})));  // {1} is a lone even part
    CHECK(is_lambda_compatible(l211, sp({{1, 2}, {3}})));

    const auto l443 = CycleType::of({4, 4, 3});
    CHECK(is_lambda_compatible(l443, SetPartition::whole(3)));
    CHECK(is_lambda_compatible(l443, sp({{1, 2}, {3}})));  // min valuation twice
    CHECK_FALSE(is_lambda_compatible(l443, sp({{1, 3}, {2}})));  // {2} is {4}
    CHECK(is_lambda_compatible(l443, sp({{1}, {2, 3}})) == false);

    // all parts odd: every partition is compatible
    const auto l533 = CycleType::of({5, 3, 3});
    for (const auto& pi : set_partitions(3)) CHECK(is_lambda_compatible(l533, pi));
}

TEST_CASE("compatibility grid for three-part cycle types") {
    // rows: representatives of the eight 2-valuation patterns of (l1,l2,l3);
    // expected entries follow the columns 123 | 12|3 | 13|2 | 1|23 | 1|2|3
    struct Row {
        std::vector<long> lambda;
        std::vector<bool> expected;
    };
    const std::vector<Row> rows = {
        {{1, 1, 1}, {true, true, true, true, true}},
        {{2, 2, 2}, {false, false, false, false, false}},
        {{4, 4, 3}, {true, true, false, false, false}},
        {{4, 4, 2}, {false, false, false, false, false}},
        {{4, 3, 3}, {true, true, true, false, false}},
        {{4, 2, 2}, {true, false, false, false, false}},
        {{4, 2, 1}, {true, false, false, false, false}},
        {{8, 4, 2}, {false, false, false, false, false}},
    };
    const auto pis = set_partitions(3);
    REQUIRE(pis.size() == 5);
    for (const auto& row : rows) {
        const auto lambda = CycleType::of(row.lambda);
        for (size_t i = 0; i < pis.size(); ++i)
            CHECK(is_lambda_compatible(lambda, pis[i]) == row.expected[i]);
    }
}

TEST_CASE("two compatibility criteria agree everywhere") {
    for (long n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& pi : set_partitions(lambda.m()))
                CHECK(is_lambda_compatible(lambda, pi) ==
                      affine_span_meets_lattice(lambda, pi));
}

TEST_CASE("partition weights v_pi") {
    const auto l211 = CycleType::of({2, 1, 1});
    CHECK(v_pi(l211, SetPartition::whole(3)) == 4);      // gcd 1 * 4^1
    CHECK(v_pi(l211, sp({{1, 2}, {3}})) == 1);           // gcd 1 * 3^0
    CHECK(v_pi(l211, sp({{1}, {2}, {3}})) == 1);         // singletons only
    CHECK(v_pi(CycleType::of({2, 2}), SetPartition::whole(2)) == 2);  // gcd 2 * 4^0
    CHECK(v_pi(CycleType::of({4}), SetPartition::whole(1)) == 1);
}

TEST_CASE("Ehrhart quasipolynomials of S_3 fixed polytopes") {
    auto q111 = ehrhart_quasipolynomial(CycleType::of({1, 1, 1}));
    CHECK(q111.even_branch == poly({1, 3, 3}));
    CHECK(q111.odd_branch == poly({1, 3, 3}));

    auto q21 = ehrhart_quasipolynomial(CycleType::of({2, 1}));
    CHECK(q21.even_branch == poly({1, 1}));
    CHECK(q21.odd_branch == poly({0, 1}));

    auto q3 = ehrhart_quasipolynomial(CycleType::of({3}));
    CHECK(q3.even_branch == poly({1}));
    CHECK(q3.odd_branch == poly({1}));
}

TEST_CASE("Ehrhart quasipolynomials of S_4 fixed polytopes") {
    auto q1111 = ehrhart_quasipolynomial(CycleType::of({1, 1, 1, 1}));
    CHECK(q1111.even_branch == poly({1, 6, 15, 16}));
    CHECK(q1111.odd_branch == poly({1, 6, 15, 16}));

    auto q211 = ehrhart_quasipolynomial(CycleType::of({2, 1, 1}));
    CHECK(q211.even_branch == poly({1, 3, 4}));
    CHECK(q211.odd_branch == poly({0, 2, 4}));

    auto q22 = ehrhart_quasipolynomial(CycleType::of({2, 2}));
    CHECK(q22.even_branch == poly({1, 2}));
    CHECK(q22.odd_branch == poly({0, 2}));

    auto q31 = ehrhart_quasipolynomial(CycleType::of({3, 1}));
    CHECK(q31.even_branch == poly({1, 1}));
    CHECK(q31.odd_branch == poly({1, 1}));

    auto q4 = ehrhart_quasipolynomial(CycleType::of({4}));
    CHECK(q4.even_branch == poly({1}));
    CHECK(q4.odd_branch.is_zero());
}

TEST_CASE("quasipolynomial structural invariants") {
    for (long n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const int m = lambda.m();
            const auto q = ehrhart_quasipolynomial(lambda);
            CHECK(q.even_branch.degree() == m - 1);
            CHECK(q.even_branch.coeff(m - 1) == volume(lambda));
            CHECK(q.even_branch.coeff(0) == 1);
            for (int d = 0; d < m; ++d)
                CHECK(q.even_branch.coeff(d) >= q.odd_branch.coeff(d));
            if (is_lattice(lambda)) CHECK(q.even_branch == q.odd_branch);
            // leading odd coefficient matches the even one iff the span
            // of the odd dilates meets the lattice
            if (index(lambda) == 1)
                CHECK(q.odd_branch.coeff(m - 1) == volume(lambda));
            // values are nonnegative and weakly increasing per parity
            for (long t = 1; t <= 6; ++t) CHECK(q(t) >= 0);
        }
    }
}

TEST_CASE("volume, lattice property, and index") {
    CHECK(volume(CycleType::of({1, 1, 1})) == 3);
    CHECK(volume(CycleType::of({1, 1, 1, 1})) == 16);
    CHECK(volume(CycleType::of({2, 1, 1})) == 4);
    CHECK(volume(CycleType::of({2, 2})) == 2);
    CHECK(volume(CycleType::of({4})) == 1);
    CHECK(volume(CycleType::of({7})) == 1);

    CHECK(is_lattice(CycleType::of({3, 1})));
    CHECK_FALSE(is_lattice(CycleType::of({2, 1, 1})));

    CHECK(index(CycleType::of({1, 1, 1})) == 1);
    CHECK(index(CycleType::of({2, 1, 1})) == 1);
    CHECK(index(CycleType::of({2, 2})) == 1);
    CHECK(index(CycleType::of({4})) == 2);
    CHECK(index(CycleType::of({4, 2})) == 2);
    CHECK(index(CycleType::of({4, 4, 3})) == 1);
    CHECK(index(CycleType::of({8, 4, 2})) == 2);
}

TEST_CASE("divisibility criterion on single blocks") {
    CHECK(affine_span_meets_lattice(CycleType::of({2, 1, 1}),
                                    SetPartition::whole(3)));   // 1 | 5
    CHECK_FALSE(affine_span_meets_lattice(CycleType::of({4}),
                                          SetPartition::whole(1)));  // 4 does not divide 10
}

TEST_CASE("box volumes over spanning forests") {
    const auto l211 = CycleType::of({2, 1, 1});
    CHECK(box_volume(l211, Forest{3, {}}) == 1);

    // the three spanning trees on 3 vertices have volumes 2, 1, 1
    std::vector<mpz_class> tree_volumes;
    for (const auto& f : forests_on(3))
        if (f.is_spanning_tree()) tree_volumes.push_back(box_volume(l211, f));
    std::sort(tree_volumes.begin(), tree_volumes.end());
    CHECK(tree_volumes == std::vector<mpz_class>{1, 1, 2});

    // per cycle type: summing box volumes over spanning trees gives the volume
    for (long n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const int m = lambda.m();
            mpz_class total = 0;
            for (const auto& f : forests_on(m))
                if (f.is_spanning_tree()) total += box_volume(lambda, f);
            CHECK(total == volume(lambda));
        }
    }
}

TEST_CASE("forest sums reproduce the partition weights") {
    for (long n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& pi : set_partitions(lambda.m()))
                CHECK(forest_sum_identity_check(lambda, pi));

    CHECK_THROWS_AS(
        forest_sum_identity_check(CycleType::of({1, 1, 1, 1, 1, 1, 1}),
                                  SetPartition::whole(7)),
        input_error);
}

TEST_CASE("one-block compatibility decides whether anything is compatible") {
    // index() inspects only the one-block partition; this is sound because
    // the one-block partition is compatible iff some partition is, and the
    // odd branch vanishes exactly when no partition is compatible.
    for (long n = 1; n <= 10; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const int m = lambda.m();
            if (m > 6) continue;
            bool whole_ok = is_lambda_compatible(lambda, SetPartition::whole(m));
            bool any_ok = false;
            for (const auto& pi : set_partitions(m))
                if (is_lambda_compatible(lambda, pi)) any_ok = true;
            CHECK(whole_ok == any_ok);
            const auto q = ehrhart_quasipolynomial(lambda);
            CHECK((index(lambda) == 1) == !q.odd_branch.is_zero());
        }
    }
}
