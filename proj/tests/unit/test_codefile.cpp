#include <random>

#include <gtest/gtest.h>

#include "advshare/codefile.hpp"
#include "advshare/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace advshare;

namespace {

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_code_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(CodeFile, ParsesQubit422) {
    const auto f = parse_code_file(fixtures::kQubit422);
    EXPECT_EQ(f.p, 2);
    EXPECT_EQ(f.n, 4u);
    EXPECT_EQ(f.check.rows(), 2u);
    EXPECT_EQ(f.check.at(1, 7), 1);
}

TEST(CodeFile, CommentsBlankLinesAndTightBars) {
    const auto f = parse_code_file("# leading\n\np=3 n=2  # header\n1 2|0 0\n\n0 0 |1 1 # tail\n");
    EXPECT_EQ(f.check, FpMatrix::from_rows(3, {{1, 2, 0, 0}, {0, 0, 1, 1}}, 4));
}

TEST(CodeFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line(""), 1u);
    EXPECT_EQ(parse_error_line("p=4 n=2\n"), 1u);
    EXPECT_EQ(parse_error_line("p=2 n=2\n1 0 | 0 0\n1 0 0 0\n"), 3u);
    EXPECT_EQ(parse_error_line("p=2 n=2\n\n1 2 | 0 0\n"), 3u);
    EXPECT_EQ(parse_error_line("p=2 n=2\n1 x | 0 0\n"), 2u);
    EXPECT_EQ(parse_error_line("p=2 n=2\n1 0 0 | 0\n"), 2u);
    EXPECT_EQ(parse_error_line("n=2 p=2\n"), 1u);
}

TEST(CodeFile, ValidationErrorsSurface) {
    EXPECT_THROW(load_stabilizer("p=2 n=1\n1 | 0\n0 | 1\n"), NotCommutative);
    EXPECT_THROW(load_stabilizer("p=2 n=2\n1 1 | 0 0\n1 1 | 0 0\n"), DependentRows);
}

TEST(CodeFile, RoundTripOnFixtures) {
    for (const char* text : {fixtures::kQubit422, fixtures::kFiveQubit, fixtures::kQutrit422}) {
        const auto code = load_stabilizer(text);
        EXPECT_EQ(load_stabilizer(print_code_file(code)), code);
        EXPECT_EQ(print_code_file(code), text);
    }
}

TEST(CodeFile, RoundTripOnRandomCodes) {
    std::mt19937_64 rng(41);
    for (int p : {2, 3, 5, 7}) {
        for (int t = 0; t < 5; ++t) {
            const std::size_t n = 2 + t % 3;
            const auto h = oracle::random_stabilizer(p, n, t % n, rng);
            const auto f = parse_code_file(print_code_file(p, n, h));
            EXPECT_EQ(f.check, h);
            EXPECT_EQ(f.n, n);
        }
    }
}
