#include "coupling/checks.hpp"

#include "coupling/errors.hpp"

namespace coupling {

namespace {

void require_horizon(unsigned horizon) {
    if (horizon < 1) throw InvalidArgument("horizon must be at least 1");
}

// Appends one violation per differing entry of `actual` against `expected`.
// `located` carries the location fields to copy into each record.
void compare_marginal(const Dist& expected, const Dist& actual, Side side, const Violation& located,
                      std::vector<Violation>& out) {
    if (expected == actual) return;
    for (std::size_t t = 0; t < expected.size(); ++t) {
        if (expected[t] == actual[t]) continue;
        Violation v = located;
        v.side = side;
        v.target = t;
        v.expected = expected[t];
        v.actual = actual[t];
        v.expected_marginal = expected.probs();
        v.actual_marginal = actual.probs();
        out.push_back(std::move(v));
    }
}

}  // namespace

CheckReport check_faithful(const CouplingKernel& Q, const StochMatrix& P) {
    require_same_space(Q.space(), P.space());
    const std::size_t n = P.size();
    CheckReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const StatePair from{i, j};
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                Rat sum(0);
                for (std::size_t j2 = 0; j2 < n; ++j2) sum += Q(from, {i2, j2});
                if (sum != P(i, i2)) {
                    report.violations.push_back(
                        {.row_pair = from, .side = Side::x, .target = i2, .expected = P(i, i2), .actual = sum});
                }
            }
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                Rat sum(0);
                for (std::size_t i2 = 0; i2 < n; ++i2) sum += Q(from, {i2, j2});
                if (sum != P(j, j2)) {
                    report.violations.push_back(
                        {.row_pair = from, .side = Side::y, .target = j2, .expected = P(j, j2), .actual = sum});
                }
            }
        }
    }
    return report;
}

// theta -> theta Q is linear, and every coupling of (mu, nu) is a convex
// combination of point masses delta_{(u,v)}, whose marginals are delta_u and
// delta_v. So the universally quantified condition holds iff it holds at each
// delta_{(u,v)}, where delta_{(u,v)} Q is row (u,v) of Q and must couple
// P(u,.) with P(v,.).
CheckReport check_strong_markovian(const CouplingKernel& Q, const StochMatrix& P) {
    require_same_space(Q.space(), P.space());
    const StateSpace& space = P.space();
    const std::size_t n = P.size();
    CheckReport report;
    for (std::size_t u = 0; u < n; ++u) {
        const Dist moved_u = evolve(delta(space, u), P);
        for (std::size_t v = 0; v < n; ++v) {
            const Dist moved_v = evolve(delta(space, v), P);
            const JointDist image = evolve_joint(JointDist::point(space, u, v), Q);
            const Violation at{.row_pair = StatePair{u, v}};
            compare_marginal(moved_u, marginal_x(image), Side::x, at, report.violations);
            compare_marginal(moved_v, marginal_y(image), Side::y, at, report.violations);
        }
    }
    return report;
}

CheckReport check_markovian_for(const CouplingKernel& Q, const StochMatrix& P, const JointDist& theta0,
                                unsigned horizon) {
    require_same_space(Q.space(), P.space());
    require_same_space(theta0.space(), P.space());
    require_horizon(horizon);
    CheckReport report;
    Dist mu = marginal_x(theta0);
    Dist nu = marginal_y(theta0);
    JointDist theta = theta0;
    for (unsigned i = 1; i <= horizon; ++i) {
        theta = evolve_joint(theta, Q);
        mu = evolve(mu, P);
        nu = evolve(nu, P);
        const Violation at{.step = i};
        compare_marginal(mu, marginal_x(theta), Side::x, at, report.violations);
        compare_marginal(nu, marginal_y(theta), Side::y, at, report.violations);
    }
    return report;
}

CheckReport check_proposition_condition(const CouplingKernel& Q, const StochMatrix& P, unsigned horizon) {
    require_same_space(Q.space(), P.space());
    require_horizon(horizon);
    const StateSpace& space = P.space();
    CheckReport report;
    for (std::size_t s = 0; s < P.size(); ++s) {
        JointDist eta = JointDist::point(space, s, s);
        Dist expected = delta(space, s);
        for (unsigned i = 1; i <= horizon; ++i) {
            eta = evolve_joint(eta, Q);
            expected = evolve(expected, P);
            const Violation at{.source = s, .step = i};
            compare_marginal(expected, marginal_x(eta), Side::x, at, report.violations);
            compare_marginal(expected, marginal_y(eta), Side::y, at, report.violations);
        }
    }
    return report;
}

}  // namespace coupling
