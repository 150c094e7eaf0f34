#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "coupling/kernel.hpp"
#include "coupling/rational.hpp"
#include "coupling/stochastic.hpp"

namespace coupling {

/// Default cap on the number of weighted terms a path enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

/// A state sequence z_0..z_h as indices into the space.
using Path = std::vector<std::size_t>;

/// Exact law of (Z_0, ..., Z_h). Only paths of positive probability are
/// stored; probability() returns 0 for everything else.
class PathDist {
public:
    /// Throws InvalidArgument for paths of the wrong length or with states
    /// out of range, NegativeEntry / SumNotOne for bad masses.
    PathDist(StateSpace space, unsigned horizon, std::map<Path, Rat> probs);

    const StateSpace& space() const { return space_; }
    unsigned horizon() const { return horizon_; }
    const std::map<Path, Rat>& probs() const { return probs_; }

    Rat probability(const Path& path) const;
    /// Pr(Z_0..Z_{k-1} = prefix) with k = prefix.size() <= horizon + 1.
    Rat prefix_probability(std::span<const std::size_t> prefix) const;
    /// Law of (Z_0, ..., Z_h') for h' <= horizon.
    PathDist truncate(unsigned horizon) const;

    friend bool operator==(const PathDist& a, const PathDist& b) {
        return a.space_ == b.space_ && a.horizon_ == b.horizon_ && a.probs_ == b.probs_;
    }

private:
    StateSpace space_;
    unsigned horizon_;
    std::map<Path, Rat> probs_;
};

/// entries[i] = Pr(T > i), T the first meeting time of the two coordinates.
struct TailVector {
    std::vector<Rat> entries;

    std::size_t size() const { return entries.size(); }
    const Rat& operator[](std::size_t i) const { return entries[i]; }
};

struct Discrepancy {
    Path path;
    Rat stuck;
    Rat markov;
};

struct StickReport {
    std::vector<Discrepancy> discrepancies;  // sorted by path
    TailVector tail;
    PathDist stuck;
    PathDist markov;

    bool verdict() const { return discrepancies.empty(); }
};

struct TvBoundRow {
    unsigned step = 0;
    Rat tv;
    Rat tail;
    bool holds = false;
};

/// Contributions to each stuck z-path split by meeting time: index t <= h
/// holds the mass of W-paths with T = t, index h + 1 the mass with T > h.
using StuckDecomposition = std::map<Path, std::vector<Rat>>;

/// Pr(T > i) for i = 0..horizon by taboo evolution: mass is pushed through Q
/// and discarded as soon as it lands on the diagonal.
TailVector coupling_time_tail(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon);

/// Law of Markov(mu, P) paths up to `horizon`. Throws EnumerationLimitExceeded
/// when n^(h+1) > limit.
PathDist markov_path_distribution(const Dist& mu, const StochMatrix& P, unsigned horizon,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

/// Law of the stuck process Z_i = X_i for i <= T, Y_i afterwards, computed
/// by enumerating every W-path. Paths that never meet within the horizon
/// contribute their X-path. Throws EnumerationLimitExceeded when
/// n^(2(h+1)) > limit.
PathDist stuck_path_distribution(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                 std::uint64_t limit = kDefaultEnumerationLimit);

StuckDecomposition stuck_path_decomposition(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                            std::uint64_t limit = kDefaultEnumerationLimit);

/// Compares the stuck path law with Markov(marginal_x(theta0), P) exactly.
StickReport verify_sticking(const CouplingKernel& Q, const JointDist& theta0, const StochMatrix& P,
                            unsigned horizon, std::uint64_t limit = kDefaultEnumerationLimit);

/// tv(mu P^i, nu P^i) beside Pr(T > i) for i = 0..horizon, mu and nu the
/// marginals of theta0. `holds` is only guaranteed for kernels with
/// has_now_equals_forever() whose marginals evolve by P.
std::vector<TvBoundRow> tv_bound_report(const StochMatrix& P, const CouplingKernel& Q, const JointDist& theta0,
                                        unsigned horizon);

/// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace coupling
