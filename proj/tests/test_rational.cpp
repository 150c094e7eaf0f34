#include <gtest/gtest.h>

#include "coupling/errors.hpp"
#include "coupling/rational.hpp"

using coupling::ParseError;
using coupling::Rat;

TEST(Rat, StoredInLowestTermsWithPositiveDenominator) {
    EXPECT_EQ(Rat(2, 4).to_string(), "1/2");
    EXPECT_EQ(Rat(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rat(4, 2).to_string(), "2");
    EXPECT_EQ(Rat(0, 5).to_string(), "0");
}

TEST(Rat, ExactArithmetic) {
    EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
    EXPECT_EQ(Rat(1, 2) - Rat(1, 3), Rat(1, 6));
    EXPECT_EQ(Rat(3, 8) * Rat(2, 3), Rat(1, 4));
    EXPECT_EQ(Rat(1, 8) / Rat(1, 2), Rat(1, 4));
    EXPECT_EQ(-Rat(1, 8), Rat(-1, 8));
    EXPECT_LT(Rat(1, 8), Rat(1, 4));
    EXPECT_EQ(coupling::pow(Rat(1, 2), 4), Rat(1, 16));
    EXPECT_EQ(coupling::abs(Rat(-3, 4)), Rat(3, 4));
}

TEST(Rat, NoPrecisionLossOnLongProducts) {
    Rat x(1);
    for (int i = 0; i < 200; ++i) x *= Rat(1, 3);
    for (int i = 0; i < 200; ++i) x *= Rat(3);
    EXPECT_EQ(x, Rat(1));
}

TEST(Rat, ParsesCanonicalAndNonReducedText) {
    EXPECT_EQ(Rat::parse("1/2"), Rat(1, 2));
    EXPECT_EQ(Rat::parse("6/8"), Rat(3, 4));
    EXPECT_EQ(Rat::parse("7"), Rat(7));
    EXPECT_EQ(Rat::parse("-3/9"), Rat(-1, 3));
    EXPECT_EQ(Rat::parse("123456789012345678901234567890/2").to_string(), "61728394506172839450617283945");
}

TEST(Rat, RejectsMalformedText) {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "0.5", "1e3", " 1/2", "1/2 ", "+1", "a/b", "1//2", "--1"}) {
        EXPECT_THROW(Rat::parse(bad), ParseError) << bad;
    }
}

TEST(Rat, DivisionByZeroThrows) {
    EXPECT_THROW(Rat(1) / Rat(0), coupling::InvalidArgument);
    EXPECT_THROW(Rat(1, 0), coupling::InvalidArgument);
}
