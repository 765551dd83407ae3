#include <doctest.h>

#include <stdexcept>

#include "pglab/field.hpp"

using namespace pglab;

TEST_CASE("prime field arithmetic mod 7") {
    Field f = Field::make(7, 1);
    CHECK(f.q() == 7);
    CHECK(f.add(3, 5) == 1);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(2) == 5);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(2, -1) == f.inv(2));
    CHECK(f.from_residue(-3) == 4);
    CHECK(f.as_residue(6) == 6);
    CHECK(f.modulus_string().empty());
}

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    CHECK(Field::make(2, 2).modulus_string() == "1,1,1");    // x^2+x+1
    CHECK(Field::make(3, 2).modulus_string() == "1,0,1");    // x^2+1
    CHECK(Field::make(2, 3).modulus_string() == "1,1,0,1");  // x^3+x+1
}

TEST_CASE("GF(9) with modulus x^2+1") {
    Field f = Field::make(3, 2);
    // encodings: a0 + a1*x <-> a0 + 3*a1
    CHECK(f.add(4, 5) == 6);  // (1+x) + (2+x) = 2x
    CHECK(f.mul(4, 4) == 6);  // (1+x)^2 = 1 + 2x + x^2 = 2x
    CHECK(f.inv(3) == 6);     // 1/x = -x = 2x
    CHECK(f.digits(5) == std::vector<int>{2, 1});
    for (Fel a = 0; a < 9; ++a) CHECK(f.from_digits(f.digits(a)) == a);
}

TEST_CASE("GF(8) with modulus x^3+x+1") {
    Field f = Field::make(2, 3);
    CHECK(f.mul(2, 4) == 3);  // x * x^2 = x^3 = x + 1
    for (Fel a = 1; a < 8; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 7) == 1);
    }
}

TEST_CASE("a custom modulus changes the multiplication") {
    Field f = Field::make(3, 2, {2, 1, 1});  // x^2+x+2
    CHECK(f.mul(3, 3) == 7);                 // x^2 = -x-2 = 2x+1
    CHECK(f.modulus_string() == "2,1,1");
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (auto [p, h] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field f = Field::make(p, h);
        const int q = f.q();
        CAPTURE(q);
        for (Fel a = 0; a < static_cast<Fel>(q); ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Fel b = 0; b < static_cast<Fel>(q); ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (Fel c = 0; c < static_cast<Fel>(q); ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(3, 2, {1, 1}), std::invalid_argument);     // wrong degree
    Field f = Field::make(5, 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.pow(0, -2), std::domain_error);
}

TEST_CASE("primality helper") {
    CHECK(Field::is_prime(2));
    CHECK(Field::is_prime(19));
    CHECK_FALSE(Field::is_prime(1));
    CHECK_FALSE(Field::is_prime(21));
}
