#pragma once

#include "coupling/kernel.hpp"
#include "coupling/stochastic.hpp"

namespace coupling {

/// Q((u,v),(x,y)) = P(u,x) P(v,y).
CouplingKernel independent_coupling(const StochMatrix& P);

/// One-step maximal coupling of each row pair. From (u,v) the chains meet at
/// x with probability min(P(u,x), P(v,x)); the leftover mass is spread as the
/// product of the two residuals, normalized by the total residual.
/// The meeting probability from (u,v) is 1 - tv(P(u,.), P(v,.)).
CouplingKernel greedy_maximal_coupling(const StochMatrix& P);

/// Replaces each diagonal row (s,s) by s -> (t,t) with probability P(s,t), so
/// the coordinates never separate once equal. Faithfulness is preserved.
CouplingKernel make_sticky_kernel(const CouplingKernel& Q, const StochMatrix& P);

/// True when every diagonal row of Q is supported on the diagonal.
bool has_now_equals_forever(const CouplingKernel& Q);

/// Rosenthal's two-state counterexample: P is the all-1/2 matrix and Q moves
/// X to X xor Y while Y is redrawn uniformly.
struct RosenthalFixture {
    StochMatrix P;
    CouplingKernel Q;
    JointDist theta;        // uniform joint, invariant under Q
    JointDist theta_prime;  // [3/8, 1/8, 1/8, 3/8], same marginals as theta
};

RosenthalFixture rosenthal_fixture();

}  // namespace coupling
