#include <gtest/gtest.h>

#include "coupling/constructions.hpp"
#include "coupling/errors.hpp"
#include "coupling/kernel.hpp"
#include "support/random_instances.hpp"

using namespace coupling;

namespace {

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rat> out;
    for (const auto& [p, q] : xs) out.emplace_back(p, q);
    return out;
}

}  // namespace

TEST(PairIndex, RowMajor) {
    EXPECT_EQ(pair_index(0, 0, 2), 0u);
    EXPECT_EQ(pair_index(0, 1, 2), 1u);
    EXPECT_EQ(pair_index(1, 0, 2), 2u);
    EXPECT_EQ(pair_index(2, 1, 3), 7u);
    for (std::size_t w = 0; w < 9; ++w) {
        const auto p = pair_at(w, 3);
        EXPECT_EQ(pair_index(p.x, p.y, 3), w);
    }
}

TEST(Marginals, SameMarginalsDifferentCouplings) {
    const auto f = rosenthal_fixture();
    const auto s = f.P.space();
    EXPECT_EQ(marginal_x(f.theta_prime), uniform(s));
    EXPECT_EQ(marginal_y(f.theta_prime), uniform(s));

    const JointDist moved(s, rats({{3, 8}, {3, 8}, {1, 8}, {1, 8}}));
    EXPECT_EQ(marginal_x(moved).probs(), rats({{3, 4}, {1, 4}}));
    EXPECT_EQ(marginal_y(moved).probs(), rats({{1, 2}, {1, 2}}));
}

TEST(Marginals, OfAProductOfPointMasses) {
    const auto s = StateSpace::numbered(2);
    const JointDist theta = product_joint(delta(s, 0), delta(s, 1));
    EXPECT_EQ(marginal_x(theta), delta(s, 0));
    EXPECT_EQ(marginal_y(theta), delta(s, 1));
}

TEST(ProductJoint, Examples) {
    const auto s = StateSpace::numbered(2);
    EXPECT_EQ(product_joint(uniform(s), uniform(s)).probs(), rats({{1, 4}, {1, 4}, {1, 4}, {1, 4}}));
    EXPECT_EQ(product_joint(delta(s, 0), delta(s, 0)), JointDist::point(s, 0, 0));
    EXPECT_EQ(product_joint(uniform(s), delta(s, 1)).probs(), rats({{0, 1}, {1, 2}, {0, 1}, {1, 2}}));
    EXPECT_THROW(product_joint(uniform(s), uniform(StateSpace::numbered(3))), SpaceMismatch);
}

TEST(ProductJoint, MarginalsRecoverFactors) {
    test_support::RandomInstances gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen.space(1 + gen.uniform_index(4));
        const Dist mu = gen.dist(s);
        const Dist nu = gen.dist(s);
        const JointDist theta = product_joint(mu, nu);
        EXPECT_EQ(marginal_x(theta), mu);
        EXPECT_EQ(marginal_y(theta), nu);
    }
}

TEST(JointDist, Validation) {
    const auto s = StateSpace::numbered(2);
    EXPECT_THROW(JointDist(s, rats({{1, 2}, {1, 2}})), InvalidArgument);
    EXPECT_THROW(JointDist(s, rats({{1, 2}, {1, 2}, {1, 2}, {-1, 2}})), NegativeEntry);
    EXPECT_THROW(JointDist(s, rats({{1, 2}, {1, 4}, {0, 1}, {0, 1}})), SumNotOne);
    EXPECT_EQ(JointDist(s, rats({{1, 4}, {1, 4}, {1, 4}, {1, 4}})).off_diagonal_mass(), Rat(1, 2));
}

TEST(CouplingKernel, Validation) {
    const auto s = StateSpace::numbered(2);
    const std::vector<Rat> good = rats({{1, 4}, {1, 4}, {1, 4}, {1, 4}});
    EXPECT_NO_THROW(CouplingKernel(s, {good, good, good, good}));
    EXPECT_THROW(CouplingKernel(s, {good, good, good}), InvalidArgument);
    EXPECT_THROW(CouplingKernel(s, {good, good, good, rats({{1, 1}})}), InvalidArgument);
    try {
        CouplingKernel(s, {good, rats({{1, 2}, {0, 1}, {0, 1}, {0, 1}}), good, good});
        FAIL();
    } catch (const SumNotOne& e) {
        EXPECT_EQ(e.deficit(), Rat(1, 2));
        EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
    }
}

TEST(EvolveJoint, RosenthalIterates) {
    const auto f = rosenthal_fixture();
    EXPECT_EQ(evolve_joint(f.theta, f.Q), f.theta);
    EXPECT_EQ(evolve_joint(f.theta_prime, f.Q).probs(), rats({{3, 8}, {3, 8}, {1, 8}, {1, 8}}));
    EXPECT_EQ(evolve_joint(JointDist::point(f.P.space(), 0, 0), f.Q).probs(), rats({{1, 2}, {1, 2}, {0, 1}, {0, 1}}));
}

TEST(EvolveJoint, PointMassPicksOutTheKernelRow) {
    test_support::RandomInstances gen(12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = gen.space(1 + gen.uniform_index(3));
        const auto Q = gen.kernel(s);
        for (std::size_t w = 0; w < Q.pair_count(); ++w) {
            const auto p = pair_at(w, s.size());
            const auto row = Q.row(w);
            EXPECT_EQ(evolve_joint(JointDist::point(s, p.x, p.y), Q).probs(), std::vector<Rat>(row.begin(), row.end()));
        }
    }
}
