#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coupling/rational.hpp"
#include "coupling/stochastic.hpp"

namespace coupling {

/// A state of the pair chain, as indices into the base space.
struct StatePair {
    std::size_t x = 0;
    std::size_t y = 0;

    bool on_diagonal() const { return x == y; }
    friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

/// Row-major pair index used everywhere, file formats included.
constexpr std::size_t pair_index(std::size_t x, std::size_t y, std::size_t n) { return x * n + y; }
constexpr StatePair pair_at(std::size_t index, std::size_t n) { return {index / n, index % n}; }

/// Distribution over base x base, indexed by pair_index.
class JointDist {
public:
    /// Throws InvalidArgument on length != n^2, NegativeEntry, SumNotOne.
    JointDist(StateSpace base, std::vector<Rat> probs);

    /// delta_{(x,y)}.
    static JointDist point(const StateSpace& base, std::size_t x, std::size_t y);

    const StateSpace& space() const { return base_; }
    std::size_t base_size() const { return base_.size(); }
    const std::vector<Rat>& probs() const { return probs_; }
    const Rat& operator()(std::size_t x, std::size_t y) const { return probs_[pair_index(x, y, base_size())]; }
    const Rat& operator[](std::size_t pair) const { return probs_[pair]; }

    /// Probability that the two coordinates differ.
    Rat off_diagonal_mass() const;

    friend bool operator==(const JointDist& a, const JointDist& b) {
        return a.base_ == b.base_ && a.probs_ == b.probs_;
    }

private:
    StateSpace base_;
    std::vector<Rat> probs_;
};

/// Row-stochastic transition matrix of the pair chain, n^2 x n^2.
class CouplingKernel {
public:
    /// rows: n^2 rows of n^2 entries in pair_index order. Each row must be a
    /// valid distribution over pairs.
    CouplingKernel(StateSpace base, std::vector<std::vector<Rat>> rows);

    const StateSpace& space() const { return base_; }
    std::size_t base_size() const { return base_.size(); }
    std::size_t pair_count() const { return base_.size() * base_.size(); }

    const Rat& operator()(std::size_t from_pair, std::size_t to_pair) const {
        return entries_[from_pair * pair_count() + to_pair];
    }
    const Rat& operator()(StatePair from, StatePair to) const {
        const auto n = base_size();
        return (*this)(pair_index(from.x, from.y, n), pair_index(to.x, to.y, n));
    }
    std::span<const Rat> row(std::size_t from_pair) const {
        return std::span<const Rat>(entries_).subspan(from_pair * pair_count(), pair_count());
    }
    std::vector<std::vector<Rat>> rows() const;

    friend bool operator==(const CouplingKernel& a, const CouplingKernel& b) {
        return a.base_ == b.base_ && a.entries_ == b.entries_;
    }

private:
    StateSpace base_;
    std::vector<Rat> entries_;
};

/// u -> sum_v theta(u, v).
Dist marginal_x(const JointDist& theta);
/// v -> sum_u theta(u, v).
Dist marginal_y(const JointDist& theta);

/// Independent joint law mu(u) nu(v).
JointDist product_joint(const Dist& mu, const Dist& nu);

/// theta * Q.
JointDist evolve_joint(const JointDist& theta, const CouplingKernel& Q);

}  // namespace coupling
