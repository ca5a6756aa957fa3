#include "cupn/counting.hpp"

#include <gtest/gtest.h>

using namespace cupn;

namespace {

Integer big(const char* s) { return Integer(s); }

}  // namespace

TEST(Binomial, SmallValuesAndDegenerateArguments) {
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(-3, 1), 0);
    EXPECT_EQ(binomial(100, 50), big("100891344545564193334812497256"));
}

TEST(Binomial, PascalRule) {
    for (int top = 1; top <= 60; ++top) {
        for (int bottom = 1; bottom <= top; ++bottom) {
            EXPECT_EQ(binomial(top, bottom), binomial(top - 1, bottom - 1) + binomial(top - 1, bottom));
        }
    }
}

TEST(Counts, PublishedExamples) {
    EXPECT_EQ(count_oracle(3, 4, 2), 20);
    EXPECT_EQ(count_oracle(6, 6, 5), 28);
    EXPECT_EQ(count_oracle(6, 7000, 5), big("163331343055757216550"));
    EXPECT_EQ(count_bounded(3, 4, 2), 6);
    EXPECT_EQ(count_bounded(12, 10, 4), 1260);
    EXPECT_EQ(count_bounded(25, 30, 5), 621621);
}

TEST(Counts, BoundedVanishesAboveTheDegrees) {
    EXPECT_EQ(count_bounded(2, 5, 3), 0);
    EXPECT_EQ(count_bounded(5, 2, 3), 0);
    EXPECT_EQ(count_oracle(1, 1, 5), 0);
}

TEST(Counts, BoundedNeverExceedsFull) {
    for (int p = 0; p <= 15; ++p) {
        for (int q = 0; q <= 15; ++q) {
            for (int n = 0; n <= std::min(p, q); ++n) {
                EXPECT_LE(count_bounded(p, q, n), count_oracle(p, q, n));
            }
        }
    }
}

TEST(Counts, SquareFormulaIsTheDiagonalCase) {
    for (int j = 0; j <= 40; ++j) {
        for (int i = 0; i <= j; ++i) {
            EXPECT_EQ(count_sq(i, j), count_bounded(j, j, j - i)) << i << " " << j;
        }
    }
}

TEST(Table, AllRowsExact) {
    const auto rows = table1();
    ASSERT_EQ(rows.size(), 8U);
    const char* expected[8][2] = {
        {"20", "6"},
        {"28", "12"},
        {"11628", "1260"},
        {"18009460", "621621"},
        {"4925156775", "68222616"},
        {"162699437009655", "970224"},
        {"225368761961739396", "33701394635724816"},
        {"163331343055757216550", "97902024"},
    };
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].full, big(expected[k][0])) << rows[k].label;
        EXPECT_EQ(rows[k].bounded, big(expected[k][1])) << rows[k].label;
    }
    EXPECT_EQ(rows[0].label, "c_3 cup_2 c_4");
}
