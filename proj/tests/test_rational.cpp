#include <doctest.h>

#include "ucat/rational.hpp"

using ucat::Rat;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(-2, -6) == Rat(1, 3));
    CHECK(Rat(2, -6) == Rat(-1, 3));
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(4, 2).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("parsing") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("canonical strings") {
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(0).str() == "0");
}

TEST_CASE("arithmetic stays exact") {
    Rat third(1, 3);
    Rat sum = third + third + third;
    CHECK(sum == Rat(1));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(3, 7) / Rat(3, 7) == Rat(1));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(-2).pow(2) == Rat(4));
}

TEST_CASE("ordering") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(0));
    CHECK(ucat::min(Rat(5, 3), Rat(3, 2)) == Rat(3, 2));
    CHECK(ucat::max(Rat(5, 3), Rat(3, 2)) == Rat(5, 3));
}

TEST_SUITE_END();
