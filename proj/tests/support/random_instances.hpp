#pragma once

// Random exact instances for property tests. Every probability is a dyadic
// rational k/64 so denominators stay small under repeated products.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "coupling/constructions.hpp"
#include "coupling/kernel.hpp"
#include "coupling/stochastic.hpp"

namespace coupling::test_support {

class RandomInstances {
public:
    static constexpr long kDenominator = 64;

    explicit RandomInstances(std::uint64_t seed) : rng_(seed) {}

    std::size_t uniform_index(std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
    }

    bool coin() { return uniform_index(2) == 1; }

    /// Random composition of 64 units into `cells` parts, as k/64 entries.
    /// With `sparse`, about half of the cells are forced to zero first.
    std::vector<Rat> probability_vector(std::size_t cells, bool sparse = false) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < cells; ++i) {
            if (!sparse || coin()) support.push_back(i);
        }
        if (support.empty()) support.push_back(uniform_index(cells));

        std::vector<long> cuts{0, kDenominator};
        std::uniform_int_distribution<long> cut(0, kDenominator);
        for (std::size_t i = 1; i < support.size(); ++i) cuts.push_back(cut(rng_));
        std::sort(cuts.begin(), cuts.end());

        std::vector<Rat> out(cells);
        for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = Rat(cuts[i + 1] - cuts[i], kDenominator);
        return out;
    }

    StateSpace space(std::size_t n) { return StateSpace::numbered(n); }

    Dist dist(const StateSpace& space) { return Dist(space, probability_vector(space.size(), coin())); }

    StochMatrix chain(std::size_t n) {
        const StateSpace s = space(n);
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(probability_vector(n, coin()));
        return StochMatrix(s, std::move(rows));
    }

    JointDist joint(const StateSpace& space) {
        return JointDist(space, probability_vector(space.size() * space.size(), coin()));
    }

    /// Arbitrary row-stochastic kernel on pairs; almost never faithful.
    CouplingKernel kernel(const StateSpace& space) {
        const std::size_t m = space.size() * space.size();
        std::vector<std::vector<Rat>> rows;
        for (std::size_t r = 0; r < m; ++r) rows.push_back(probability_vector(m, coin()));
        return CouplingKernel(space, std::move(rows));
    }

    /// Faithful kernel: one of the standard constructions, a sticky version of
    /// one, or a dyadic convex mix of two (faithfulness is convex).
    CouplingKernel faithful_kernel(const StochMatrix& P) {
        switch (uniform_index(5)) {
            case 0: return independent_coupling(P);
            case 1: return greedy_maximal_coupling(P);
            case 2: return make_sticky_kernel(independent_coupling(P), P);
            case 3: return make_sticky_kernel(greedy_maximal_coupling(P), P);
            default: {
                const auto a = independent_coupling(P);
                const auto b = greedy_maximal_coupling(P);
                const Rat w(static_cast<long>(uniform_index(9)), 8);
                std::vector<std::vector<Rat>> rows = a.rows();
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] = w * a(r, c) + (Rat(1) - w) * b(r, c);
                }
                return CouplingKernel(P.space(), std::move(rows));
            }
        }
    }

    /// Moves mass inside one row of Q so that one marginal of that row breaks
    /// while the row stays a distribution. Needs n >= 2.
    CouplingKernel perturb(const CouplingKernel& Q) {
        const std::size_t n = Q.base_size();
        auto rows = Q.rows();
        const std::size_t r = uniform_index(rows.size());
        std::vector<std::size_t> positive;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (!rows[r][c].is_zero()) positive.push_back(c);
        }
        const std::size_t from = positive[uniform_index(positive.size())];
        const StatePair p = pair_at(from, n);
        const std::size_t shift = 1 + uniform_index(n - 1);
        // Shifting x keeps the row's Y-marginal and breaks its X-marginal;
        // shifting y does the reverse.
        const std::size_t to = coin() ? pair_index((p.x + shift) % n, p.y, n) : pair_index(p.x, (p.y + shift) % n, n);
        const Rat moved = rows[r][from] / Rat(2);
        rows[r][from] -= moved;
        rows[r][to] += moved;
        return CouplingKernel(Q.space(), std::move(rows));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace coupling::test_support
