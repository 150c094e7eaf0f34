#include <gtest/gtest.h>

#include <filesystem>

#include "coupling/constructions.hpp"
#include "coupling/errors.hpp"
#include "coupling/io.hpp"
#include "support/random_instances.hpp"

using namespace coupling;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(COUPLING_TEST_DATA) / "rosenthal" / name; }

}  // namespace

TEST(CanonicalFiles, RosenthalFixturesRoundTripByteForByte) {
    const auto f = rosenthal_fixture();
    EXPECT_EQ(io::load_chain(data("chain.json")), f.P);
    EXPECT_EQ(io::load_kernel(data("kernel.json")), f.Q);
    EXPECT_EQ(io::load_joint(data("theta.json")), f.theta);
    EXPECT_EQ(io::load_joint(data("theta_prime.json")), f.theta_prime);

    EXPECT_EQ(io::format_chain(f.P), io::read_file(data("chain.json")));
    EXPECT_EQ(io::format_kernel(f.Q), io::read_file(data("kernel.json")));
    EXPECT_EQ(io::format_joint(f.theta), io::read_file(data("theta.json")));
    EXPECT_EQ(io::format_joint(f.theta_prime), io::read_file(data("theta_prime.json")));
}

TEST(CanonicalFiles, RandomRoundTrips) {
    test_support::RandomInstances gen(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto P = gen.chain(1 + gen.uniform_index(4));
        const auto Q = gen.kernel(P.space());
        const auto theta = gen.joint(P.space());
        const auto mu = gen.dist(P.space());
        EXPECT_EQ(io::parse_chain(io::format_chain(P)), P);
        EXPECT_EQ(io::parse_kernel(io::format_kernel(Q)), Q);
        EXPECT_EQ(io::parse_joint(io::format_joint(theta)), theta);
        EXPECT_EQ(io::parse_dist(io::format_dist(mu)), mu);
        const auto text = io::format_kernel(Q);
        EXPECT_EQ(io::format_kernel(io::parse_kernel(text)), text);
    }
}

TEST(ParseChain, AcceptsIntegersAndRejectsFloats) {
    const auto P = io::parse_chain(R"({"states": ["a", "b"], "P": [[1, 0], ["1/3", "2/3"]]})");
    EXPECT_EQ(P(1, 1), Rat(2, 3));
    EXPECT_THROW(io::parse_chain(R"({"states": ["a", "b"], "P": [[0.5, 0.5], [1, 0]]})"), ParseError);
}

TEST(ParseChain, ShapeErrors) {
    EXPECT_THROW(io::parse_chain("not json"), ParseError);
    EXPECT_THROW(io::parse_chain(R"({"P": [["1"]]})"), ParseError);
    EXPECT_THROW(io::parse_chain(R"({"states": ["a"]})"), ParseError);
    EXPECT_THROW(io::parse_chain(R"({"states": [1], "P": [["1"]]})"), ParseError);
    EXPECT_THROW(io::parse_chain(R"({"states": ["a"], "P": [["x"]]})"), ParseError);
    EXPECT_THROW(io::parse_chain(R"([1, 2])"), ParseError);
}

TEST(ParseChain, ValidationErrorsPassThrough) {
    EXPECT_THROW(io::parse_chain(R"({"states": ["a", "b"], "P": [["1/2", "1/4"], ["1", "0"]]})"), SumNotOne);
    EXPECT_THROW(io::parse_chain(R"({"states": ["a", "b"], "P": [["2", "-1"], ["1", "0"]]})"), NegativeEntry);
    EXPECT_THROW(io::parse_chain(R"({"states": ["a", "a"], "P": [["1", "0"], ["1", "0"]]})"), InvalidArgument);
}

TEST(ParseJoint, RejectsWrongLength) {
    EXPECT_THROW(io::parse_joint(R"({"states": ["0", "1"], "theta": ["1/2", "1/2"]})"), InvalidArgument);
}

TEST(ReadFile, MissingFileIsAParseError) {
    EXPECT_THROW(io::read_file("/nonexistent/coupling/file.json"), ParseError);
}

TEST(PathKeys, RoundTrip) {
    const StateSpace s({"a", "b", "c"});
    EXPECT_EQ(io::path_key(s, {2, 0, 1}), "c,a,b");
    EXPECT_EQ(io::parse_path_key(s, "c,a,b"), (Path{2, 0, 1}));
    EXPECT_THROW(io::parse_path_key(s, "c,z"), ParseError);
}

TEST(PathDistJson, RoundTrip) {
    const auto s = StateSpace::numbered(2);
    const PathDist law(s, 1, {{{1, 0}, Rat(1, 8)}, {{0, 1}, Rat(7, 8)}});
    const auto j = io::path_dist_to_json(law);
    EXPECT_EQ(j.at("1,0"), "1/8");
    EXPECT_EQ(io::path_dist_from_json(s, j), law);
}
