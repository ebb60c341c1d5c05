#include "quivar/rational.hpp"

#include "doctest.h"

#include <random>

using namespace quivar;

TEST_CASE("rational parse and print") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("+2/6") == Rational(1, 3));
    CHECK(rational_str(Rational(1, 3)) == "1/3");
    CHECK(rational_str(Rational(-4)) == "-4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("gaussian parse and print") {
    CHECK(parse_gaussian("1/2+1/3i") == GaussianRational(Rational(1, 2), Rational(1, 3)));
    CHECK(parse_gaussian("1/2-1/3i") == GaussianRational(Rational(1, 2), Rational(-1, 3)));
    CHECK(parse_gaussian("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(parse_gaussian("i") == GaussianRational(Rational(0), Rational(1)));
    CHECK(parse_gaussian("-5") == GaussianRational(Rational(-5)));
    CHECK(parse_gaussian(" 1/2 + 1/3 i ") == GaussianRational(Rational(1, 2), Rational(1, 3)));

    CHECK(gaussian_str(GaussianRational(0)) == "0");
    CHECK(gaussian_str(GaussianRational(Rational(1, 2), Rational(1, 3))) == "1/2+1/3i");
    CHECK(gaussian_str(GaussianRational(Rational(0), Rational(-2))) == "-2i");
    CHECK(gaussian_str(GaussianRational(Rational(3), Rational(-1, 2))) == "3-1/2i");

    CHECK_THROWS_AS(parse_gaussian("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("2i+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1++2i"), std::invalid_argument);

    // roundtrip on random values
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(parse_gaussian(gaussian_str(z)) == z);
    }
}

TEST_CASE("lexicographic order is total and additive") {
    GaussianRational a(Rational(1, 2), Rational(100));
    GaussianRational b(Rational(2, 3), Rational(-100));
    CHECK(a < b); // real part decides first
    CHECK(GaussianRational(Rational(1), Rational(1)) < GaussianRational(Rational(1), Rational(2)));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto rand_g = [&] {
        return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    };
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational x = rand_g(), y = rand_g(), c = rand_g();
        // totality
        CHECK(((x < y) || (y < x) || (x == y)));
        // additivity
        if (x <= y) CHECK(x + c <= y + c);
    }
}

TEST_CASE("gaussian arithmetic") {
    GaussianRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(1, 3));
    CHECK(z / z == GaussianRational(1));
    CHECK(z * z.conj() == GaussianRational(Rational(1, 4) + Rational(1, 9)));
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
}
