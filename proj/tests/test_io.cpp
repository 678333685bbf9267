#include <gtest/gtest.h>

#include <sstream>

#include "permlcs/algebraic.hpp"
#include "permlcs/bounds.hpp"
#include "permlcs/hadamard.hpp"
#include "permlcs/io.hpp"

using namespace permlcs;

namespace {

PermSet parse_set(const std::string& text) {
    std::istringstream in(text);
    return read_permset(in);
}

TEST(PermLine, Format) {
    std::ostringstream out;
    write_permline(out, Permutation::from_one_based({3, 1, 2}));
    EXPECT_EQ(out.str(), "permline 1 3\n3 1 2\n");
    std::istringstream in("permline 1 3\r\n3  1\t2\r\n\n");
    EXPECT_EQ(read_permline(in), Permutation::from_one_based({3, 1, 2}));
}

TEST(PermSet, Format) {
    const PermSet s({identity(3), reversal(3)});
    EXPECT_EQ(to_permset_string(s), "permset 1 2 3\n1 2 3\n3 2 1\n");
    const PermSet back = parse_set("permset 1 2 3\n1 2 3\n3 2 1\n");
    EXPECT_TRUE(back.same_members(s));
    EXPECT_EQ(back.provenance().kind, Construction::imported);
}

TEST(PermSet, RoundTripProperty) {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Rng rng = trial_rng(19, trial);
        const PermSet s = random_set(1 + uniform_below(rng, 60), 1 + uniform_below(rng, 8), rng);
        EXPECT_TRUE(parse_set(to_permset_string(s)).same_members(s));
    }
    const PermSet alg = build_general(100, 4);
    EXPECT_TRUE(parse_set(to_permset_string(alg)).same_members(alg));
}

TEST(PermSet, MalformedInputs) {
    EXPECT_THROW(parse_set(""), ParseError);
    EXPECT_THROW(parse_set("permset 2 1 3\n1 2 3\n"), ParseError);
    EXPECT_THROW(parse_set("permline 1 3\n1 2 3\n"), ParseError);
    EXPECT_THROW(parse_set("permset 1 2 3\n1 2 3\n"), ParseError);          // missing member
    EXPECT_THROW(parse_set("permset 1 1 3\n1 2\n"), ParseError);            // short line
    EXPECT_THROW(parse_set("permset 1 1 3\n1 2 2\n"), ParseError);          // not a permutation
    EXPECT_THROW(parse_set("permset 1 1 3\n1 2 x\n"), ParseError);
    EXPECT_THROW(parse_set("permset 1 1 3\n1 2 3\n3 2 1\n"), ParseError);   // extra member
    EXPECT_THROW(parse_set("permset 1 0 3\n"), ParseError);
    EXPECT_THROW(parse_set("permset 1 1 0\n\n"), ParseError);
}

TEST(Hadamard, TextBlock) {
    std::ostringstream out;
    write_hadamard(out, sylvester(4));
    EXPECT_EQ(out.str(), "++++\n+-+-\n++--\n+--+\n");
    std::istringstream in(out.str());
    EXPECT_EQ(read_hadamard(in), sylvester(4));
    std::istringstream bad("++\n+x\n");
    EXPECT_THROW(read_hadamard(bad), ParseError);
}

} // namespace
