#include <doctest.h>

#include "fcpc/field.hpp"

using namespace fcpc;

TEST_CASE("prime field basics") {
    Field f2(2);
    CHECK(f2.q() == 2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.degree() == 1);
    CHECK(f2.modulus().empty());
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
}

TEST_CASE("GF(4) uses x^2+x+1, so the generator squares to itself plus one") {
    Field f4(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    CHECK(f4.modulus() == std::vector<int>({1, 1, 1}));
    // element 2 encodes x; x^2 = x + 1 encodes to 3
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);  // x * (x+1) = x^2 + x = 1
}

TEST_CASE("non-prime-powers and oversized q are rejected") {
    CHECK_THROWS_AS(Field(6), NotAPrimePower);
    CHECK_THROWS_AS(Field(12), NotAPrimePower);
    CHECK_THROWS_AS(Field(1), NotAPrimePower);
    CHECK_THROWS_AS(Field(257), TooLarge);
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        Field f(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("every supported prime power constructs") {
    for (int q : {25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256}) {
        Field f(q);
        CHECK(f.q() == q);
        for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}
