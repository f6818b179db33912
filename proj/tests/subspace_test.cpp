#include <doctest.h>

#include <random>

#include "fcpc/subspace.hpp"

using namespace fcpc;

TEST_CASE("kernel of the reference 2x4 map over F_2") {
    Space s(Field(2), 4);
    const Subspace ker = kernel_of_linear(s, {{1, 1, 1, 0}, {0, 1, 1, 0}});
    CHECK(ker.dim() == 2);
    std::vector<WordRank> expected = {s.parse_word("0000"), s.parse_word("0001"), s.parse_word("0110"),
                                      s.parse_word("0111")};
    std::sort(expected.begin(), expected.end());
    CHECK(ker.enumerate() == expected);
}

TEST_CASE("zero map and identity map kernels") {
    Space s(Field(3), 3);
    CHECK(kernel_of_linear(s, {{0, 0, 0}}).dim() == 3);
    CHECK(kernel_of_linear(s, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).dim() == 0);
    CHECK(kernel_of_linear(s, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).enumerate() == std::vector<WordRank>{0});
}

TEST_CASE("kernel intersection of the two coordinate functionals on F_2^3") {
    Space s(Field(2), 3);
    const Subspace k1 = kernel_of_linear(s, {{1, 0, 0}});
    const Subspace k2 = kernel_of_linear(s, {{0, 1, 0}});
    const Subspace both = kernel_intersection({k1, k2});
    std::vector<WordRank> expected = {s.parse_word("000"), s.parse_word("001")};
    std::sort(expected.begin(), expected.end());
    CHECK(both.enumerate() == expected);
}

TEST_CASE("intersection with the whole space returns the other operand") {
    Space s(Field(3), 3);
    const Subspace v = kernel_of_linear(s, {{1, 2, 0}});
    CHECK(kernel_intersection({v, Subspace::whole(s)}) == v);
}

TEST_CASE("complementary spaces intersect in the zero subspace") {
    Space s(Field(2), 4);
    const Subspace a(s, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const Subspace b(s, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    const Subspace both = kernel_intersection({a, b});
    // brute-force membership scan as the oracle
    int common = 0;
    for (WordRank u = 0; u < s.size(); ++u) {
        if (a.contains(u) && b.contains(u)) ++common;
    }
    CHECK(common == 1);
    CHECK(both.dim() == 0);
}

TEST_CASE("span size is q^dim and membership matches enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int q = trial % 2 == 0 ? 2 : 3;
        Space s(Field(q), 4);
        std::vector<std::vector<int>> gens;
        std::uniform_int_distribution<int> sym(0, q - 1);
        for (int g = 0; g < 2; ++g) {
            std::vector<int> row(4);
            for (int& x : row) x = sym(rng);
            gens.push_back(std::move(row));
        }
        const Subspace v(s, gens);
        const std::vector<WordRank> members = v.enumerate();
        uint64_t expected_size = 1;
        for (int i = 0; i < v.dim(); ++i) expected_size *= q;
        CHECK(members.size() == expected_size);
        size_t seen = 0;
        for (WordRank u = 0; u < s.size(); ++u) seen += v.contains(u);
        CHECK(seen == members.size());
    }
}

TEST_CASE("double orthogonal complement restores the subspace") {
    Space s(Field(3), 4);
    const Subspace v(s, {{1, 0, 2, 0}, {0, 1, 1, 1}});
    CHECK(v.orthogonal_complement().orthogonal_complement() == v);
}
