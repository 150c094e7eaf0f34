#pragma once

// Brute-force oracles, written independently of the library's algorithms.

#include <cstddef>
#include <functional>
#include <vector>

#include "coupling/kernel.hpp"
#include "coupling/rational.hpp"
#include "coupling/stochastic.hpp"

namespace coupling::test_support {

/// max over events A of |mu(A) - nu(A)|, by enumerating all 2^n subsets.
inline Rat tv_by_subsets(const Dist& mu, const Dist& nu) {
    const std::size_t n = mu.size();
    Rat best(0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Rat diff(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) diff += mu[i] - nu[i];
        }
        if (abs(diff) > best) best = abs(diff);
    }
    return best;
}

/// Pr(T > i) for i = 0..horizon by summing the weight of every W-path of
/// length horizon + 1 whose first i + 1 pairs are all off the diagonal.
inline std::vector<Rat> tail_by_enumeration(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon) {
    const std::size_t n = Q.base_size();
    const std::size_t m = Q.pair_count();
    std::vector<Rat> tail(horizon + 1);
    std::vector<std::size_t> walk;
    std::function<void(const Rat&)> go = [&](const Rat& weight) {
        if (walk.size() == horizon + 1) {
            for (unsigned i = 0; i <= horizon; ++i) {
                bool apart = true;
                for (unsigned j = 0; j <= i; ++j) apart = apart && walk[j] / n != walk[j] % n;
                if (apart) tail[i] += weight;
            }
            return;
        }
        for (std::size_t to = 0; to < m; ++to) {
            walk.push_back(to);
            go(weight * Q(walk[walk.size() - 2], to));
            walk.pop_back();
        }
    };
    for (std::size_t w = 0; w < m; ++w) {
        walk.push_back(w);
        go(theta0[w]);
        walk.pop_back();
    }
    return tail;
}

/// Pr(Z_0..Z_k = z) for the stuck process by a forward pass over the
/// augmented state (pair, already met), with no path enumeration.
inline Rat stuck_probability_forward(const CouplingKernel& Q, const JointDist& theta0, const std::vector<std::size_t>& z) {
    const std::size_t n = Q.base_size();
    const std::size_t m = Q.pair_count();
    // alpha[met][w]: mass at pair w, consistent with z so far.
    std::vector<std::vector<Rat>> alpha(2, std::vector<Rat>(m));
    for (std::size_t w = 0; w < m; ++w) {
        const std::size_t x = w / n, y = w % n;
        if (x == z[0]) alpha[x == y ? 1 : 0][w] += theta0[w];
    }
    for (std::size_t i = 1; i < z.size(); ++i) {
        std::vector<std::vector<Rat>> next(2, std::vector<Rat>(m));
        for (int met = 0; met < 2; ++met) {
            for (std::size_t w = 0; w < m; ++w) {
                if (alpha[met][w].is_zero()) continue;
                for (std::size_t to = 0; to < m; ++to) {
                    const std::size_t x = to / n, y = to % n;
                    const std::size_t shown = met ? y : x;
                    if (shown != z[i]) continue;
                    const int met_after = (met || x == y) ? 1 : 0;
                    next[met_after][to] += alpha[met][w] * Q(w, to);
                }
            }
        }
        alpha = std::move(next);
    }
    Rat total(0);
    for (const auto& row : alpha) {
        for (const auto& a : row) total += a;
    }
    return total;
}

/// mu(z_0) prod P(z_i, z_{i+1}).
inline Rat markov_probability(const Dist& mu, const StochMatrix& P, const std::vector<std::size_t>& z) {
    Rat p = mu[z[0]];
    for (std::size_t i = 0; i + 1 < z.size(); ++i) p *= P(z[i], z[i + 1]);
    return p;
}

}  // namespace coupling::test_support
