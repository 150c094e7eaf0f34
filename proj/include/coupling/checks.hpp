#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coupling/kernel.hpp"
#include "coupling/rational.hpp"
#include "coupling/stochastic.hpp"

namespace coupling {

enum class Side { x, y };

/// One mismatching entry. Which location fields are set depends on the check:
///  - faithful / strong:      row_pair
///  - markovian_for:          step
///  - proposition_condition:  source and step
/// `target` is the index of the mismatching entry of the X- or Y-marginal.
/// For marginal-based checks the full expected and actual marginals are
/// attached so reports can print them whole.
struct Violation {
    std::optional<StatePair> row_pair{};
    std::optional<std::size_t> source{};
    std::optional<unsigned> step{};
    Side side = Side::x;
    std::size_t target = 0;
    Rat expected{};
    Rat actual{};
    std::vector<Rat> expected_marginal{};
    std::vector<Rat> actual_marginal{};
};

/// Violations are in canonical order: (source, step, row pair, side, target).
struct CheckReport {
    std::vector<Violation> violations;

    bool verdict() const { return violations.empty(); }
};

/// Scans every row (i,j) and target for
///   sum_{j'} Q((i,j),(i',j')) == P(i,i')  and  sum_{i'} Q((i,j),(i',j')) == P(j,j').
CheckReport check_faithful(const CouplingKernel& Q, const StochMatrix& P);

/// Decides whether theta Q couples (mu P, nu P) for every coupling theta of
/// every (mu, nu), via the point masses delta_{(u,v)}.
CheckReport check_strong_markovian(const CouplingKernel& Q, const StochMatrix& P);

/// Checks the marginals of theta_i = theta_{i-1} Q against mu P^i and nu P^i
/// for i = 1..horizon. A true verdict holds up to `horizon` only.
CheckReport check_markovian_for(const CouplingKernel& Q, const StochMatrix& P, const JointDist& theta0,
                                unsigned horizon);

/// For every s: starting from delta_{(s,s)}, both marginals of every iterate
/// eta_i (i = 1..horizon) must equal delta_s P^i.
CheckReport check_proposition_condition(const CouplingKernel& Q, const StochMatrix& P, unsigned horizon);

}  // namespace coupling
