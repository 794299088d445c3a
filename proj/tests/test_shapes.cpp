#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "yg/shapes.hpp"
#include "yg/tableau.hpp"
#include "yg/walks.hpp"

#include <sstream>

using namespace yg;

TEST_CASE("partition canonicalization and validation") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({}).empty());
    CHECK(Partition({2, 2, 1}).sum() == 5);
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({-1}), input_error);
    CHECK_THROWS_AS(Partition({2, 1, 1}, 2), input_error);
    CHECK(Partition({3, 1}).to_string(3) == "3.1.0");
    CHECK(Partition({2, 1, 1}).conjugate() == Partition({3, 1}));
}

TEST_CASE("rsk row insertion on the worked examples") {
    CHECK(rsk_row_insert({}, 2).shape() == Partition({}));
    CHECK(rsk_row_insert({1, 1, 2}, 2).shape() == Partition({3}));

    // (2,1,1): bump by hand gives shape (2,1); first row equals the LWIS.
    const TableauPair t = rsk_row_insert({2, 1, 1}, 2);
    CHECK(t.shape() == Partition({2, 1}));
    CHECK(t.p.is_semistandard());
    CHECK(t.q.is_standard());
    CHECK(oracle::lwis_bruteforce({2, 1, 1}) == 2);
    CHECK(t.shape().part(0) == 2);

    CHECK_THROWS_AS(rsk_row_insert({1, 5}, 2), input_error);
    CHECK_THROWS_AS(rsk_row_insert({0}, 2), input_error);
}

TEST_CASE("rsk tableaux are valid and shapes match the shape-only path") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            oracle::for_each_word(k, n, [&](const Word& w) {
                const TableauPair t = rsk_row_insert(w, k);
                CHECK(t.p.is_semistandard());
                CHECK(t.q.is_standard());
                CHECK(t.p.shape() == t.q.shape());
                CHECK(t.shape() == rsk_shape_row(w, k));
            });
        }
    }
}

TEST_CASE("schensted: first row equals longest weakly increasing subsequence") {
    CHECK(longest_weakly_increasing({1, 2, 3}) == 3);
    CHECK(longest_weakly_increasing({3, 2, 1}) == 1);
    CHECK(longest_weakly_increasing({2, 1, 1}) == 2);
    CHECK(longest_weakly_increasing({}) == 0);

    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 7; ++n) {
            oracle::for_each_word(k, n, [&](const Word& w) {
                CHECK(rsk_shape_row(w, k).part(0) == longest_weakly_increasing(w));
            });
        }
    }

    // DP against the exponential enumeration on short words.
    oracle::for_each_word(3, 6, [&](const Word& w) {
        CHECK(longest_weakly_increasing(w) == oracle::lwis_bruteforce(w));
    });
}

TEST_CASE("column insertion shape equals row shape of the reversed word") {
    CHECK(rsk_shape_column({}, 2) == Partition({}));
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 6; ++n) {
            oracle::for_each_word(k, n, [&](const Word& w) {
                Word rev(w.rbegin(), w.rend());
                CHECK(rsk_shape_column(w, k) == rsk_row_insert(rev, k).shape());
            });
        }
    }
}

TEST_CASE("f_hook on small shapes and against standard-tableau enumeration") {
    CHECK(f_hook(Partition({})) == 1);
    CHECK(f_hook(Partition({7})) == 1);
    CHECK(f_hook(Partition({2, 1})) == 2);
    CHECK(f_hook(Partition({2, 1, 1})) == 3);
    for (long long n = 0; n <= 8; ++n) {
        for (const auto& shape : enumerate_partitions(n, 4)) {
            CHECK(f_hook(shape) == BigInt(oracle::count_standard_tableaux(shape)));
        }
    }
}

TEST_CASE("f_hook equals f_reflection up to N = 40") {
    for (long long n = 0; n <= 40; ++n) {
        for (const auto& shape : enumerate_partitions(n, 4)) {
            CHECK(f_hook(shape) == f_reflection(shape, 4));
        }
    }
}

TEST_CASE("d_weyl on the pinned values and against semistandard enumeration") {
    CHECK(d_weyl(Partition({}), 3) == 1);
    CHECK(d_weyl(Partition({0, 0}), 2) == 1);
    CHECK(d_weyl(Partition({1}), 2) == 2);
    CHECK(d_weyl(Partition({2, 1}), 3) == 8); // su(3) adjoint
    CHECK(oracle::count_semistandard_tableaux(Partition({2, 1}), 3) == 8);
    CHECK_THROWS_AS(d_weyl(Partition({1, 1, 1}), 2), input_error);

    for (long long n = 0; n <= 6; ++n) {
        for (const auto& shape : enumerate_partitions(n, 3)) {
            CHECK(d_weyl(shape, 3) ==
                  BigInt(oracle::count_semistandard_tableaux(shape, 3)));
        }
    }
}

TEST_CASE("d_weyl is invariant under adding a constant to every part") {
    for (const auto& shape : enumerate_partitions(9, 3)) {
        std::vector<int> bumped;
        for (int a = 0; a < 3; ++a) bumped.push_back(shape.part(static_cast<std::size_t>(a)) + 5);
        CHECK(d_weyl(shape, 3) == d_weyl(Partition(bumped), 3));
    }
}

TEST_CASE("enumerate_partitions ordering, counts, duplicates") {
    const auto p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0] == Partition({3}));
    CHECK(p32[1] == Partition({2, 1}));

    CHECK(enumerate_partitions(0, 5) == std::vector<Partition>{Partition({})});

    // Brute-force triple loop: partitions of 10 into <= 3 parts.
    long long count = 0;
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c)
                if (a + b + c == 10) ++count;
    CHECK(count == 14);
    const auto p103 = enumerate_partitions(10, 3);
    CHECK(static_cast<long long>(p103.size()) == count);
    for (std::size_t i = 1; i < p103.size(); ++i) CHECK(p103[i - 1] > p103[i]);
}

TEST_CASE("center produces exact weight coordinates") {
    const CenteredShape c = center(Partition({3}), 2, 3);
    CHECK(c.denominator == 2);
    CHECK(c.numerators == std::vector<long long>{3, -3});

    const CenteredShape z = center(Partition({4, 4}), 2, 8);
    CHECK(z.numerators == std::vector<long long>{0, 0});

    const CenteredShape a = center(Partition({2, 1}), 3, 3);
    CHECK(a.numerators == std::vector<long long>{3, 0, -3});
    CHECK(a.denominator == 3);

    CHECK_THROWS_AS(center(Partition({2, 1}), 3, 4), input_error);
}

TEST_CASE("exact shape distribution matches exhaustive RSK") {
    const ExactDist d23 = exact_shape_distribution(2, 3);
    CHECK(d23.weights.size() == 2);
    CHECK(d23.weights.at(Partition({3})) == 4);
    CHECK(d23.weights.at(Partition({2, 1})) == 4);
    CHECK(d23.total == 8);

    const ExactDist d15 = exact_shape_distribution(1, 5);
    CHECK(d15.weights.size() == 1);
    CHECK(d15.weights.at(Partition({5})) == 1);

    for (int k = 2; k <= 3; ++k) {
        for (int n = 0; n <= 7; ++n) {
            const auto expected = oracle::exhaustive_shape_histogram(k, n);
            const ExactDist got = exact_shape_distribution(k, n);
            CHECK(got.weights == expected);
        }
    }
}

TEST_CASE("partition of unity: total is k^N") {
    for (int k = 1; k <= 4; ++k) {
        for (long long n = 0; n <= 60; ++n) {
            CHECK(exact_shape_distribution(k, n).total == big_pow(static_cast<std::uint64_t>(k),
                                                                  static_cast<std::uint64_t>(n)));
        }
    }
}

TEST_CASE("exact distribution CSV format") {
    std::ostringstream os;
    exact_shape_distribution(3, 3).write_csv(os);
    // lambda |- 3 over k = 3: n = f * d gives 1, 16, 10 with total 27.
    CHECK(os.str() == "shape,count\n1.1.1,1\n2.1.0,16\n3.0.0,10\n");
}
