#include <doctest.h>

#include <random>
#include <set>

#include "fcpc/space.hpp"

using namespace fcpc;

namespace {

// independent digit-count oracle for distances
int oracle_distance(const Space& s, WordRank u, WordRank v) {
    int d = 0;
    const auto du = s.digits_of(u), dv = s.digits_of(v);
    for (int i = 0; i < s.k(); ++i) d += du[i] != dv[i];
    return d;
}

}  // namespace

TEST_CASE("rank and digits round-trip over the whole space") {
    for (int q : {2, 3, 4}) {
        Space s(Field(q), 4);
        for (WordRank u = 0; u < s.size(); ++u) CHECK(s.rank_of(s.digits_of(u)) == u);
    }
}

TEST_CASE("rank encoding is little-endian: leftmost symbol is digit 0") {
    Space s(Field(2), 4);
    CHECK(s.parse_word("1000") == 1);
    CHECK(s.parse_word("0001") == 8);
    CHECK(s.parse_word("0110") == 6);
}

TEST_CASE("distance counts differing positions") {
    Space s(Field(2), 6);
    CHECK(s.distance(s.parse_word("110011"), s.parse_word("111100")) == 4);
    CHECK(s.distance(0, 0) == 0);

    Space f4(Field(4), 2);
    // (1,0) vs (w,0): one differing coordinate
    CHECK(f4.distance(f4.rank_of({1, 0}), f4.rank_of({2, 0})) == 1);
}

TEST_CASE("weight and support agree and flag the zero word") {
    Space s(Field(3), 3);
    CHECK(s.weight(0) == 0);
    CHECK(s.support(0).empty());
    const WordRank u = s.rank_of({1, 0, 2});
    CHECK(s.support(u) == std::vector<int>({1, 3}));
    CHECK(s.weight(u) == 2);

    Space f4(Field(4), 2);
    CHECK(f4.weight(f4.rank_of({2, 3})) == 2);
}

TEST_CASE("triangle inequality and translation identity, exhaustive on small spaces") {
    for (int q : {2, 3}) {
        Space s(Field(q), q == 2 ? 4 : 3);
        for (WordRank u = 0; u < s.size(); ++u) {
            for (WordRank v = 0; v < s.size(); ++v) {
                CHECK(s.distance(u, v) == oracle_distance(s, u, v));
                CHECK(s.distance(u, v) == s.weight(s.sub(u, v)));
                for (WordRank w = 0; w < s.size(); ++w)
                    CHECK(s.distance(u, w) <= s.distance(u, v) + s.distance(v, w));
            }
        }
    }
}

TEST_CASE("triangle inequality, randomized on a larger space") {
    Space s(Field(4), 6);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> pick(0, s.size() - 1);
    for (int n = 0; n < 2000; ++n) {
        const WordRank u = pick(rng), v = pick(rng), w = pick(rng);
        CHECK(s.distance(u, w) <= s.distance(u, v) + s.distance(v, w));
        CHECK(s.distance(u, v) == s.distance(v, u));
    }
}

TEST_CASE("ball enumeration yields exactly the words within the radius") {
    Space s(Field(3), 3);
    for (int rho : {0, 1, 2}) {
        std::set<WordRank> ball;
        s.for_each_in_ball(s.parse_word("120"), rho, [&](WordRank v) {
            ball.insert(v);
            return true;
        });
        std::set<WordRank> expected;
        for (WordRank v = 0; v < s.size(); ++v) {
            if (s.distance(s.parse_word("120"), v) <= rho) expected.insert(v);
        }
        CHECK(ball == expected);
    }
}

TEST_CASE("materialization cap guards explicit spaces") {
    const uint64_t original = space_cap();
    set_space_cap(8);
    Space s(Field(2), 4);
    CHECK_THROWS_AS(s.require_materializable(), SpaceTooLarge);
    set_space_cap(original);
    CHECK_NOTHROW(s.require_materializable());
}
