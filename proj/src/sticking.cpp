#include "coupling/sticking.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "coupling/errors.hpp"

namespace coupling {

namespace {

void require_within_limit(std::uint64_t required, std::uint64_t limit) {
    if (required > limit) throw EnumerationLimitExceeded(required, limit);
}

}  // namespace

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > max / base) return max;
        out *= base;
    }
    return out;
}

PathDist::PathDist(StateSpace space, unsigned horizon, std::map<Path, Rat> probs)
    : space_(std::move(space)), horizon_(horizon) {
    Rat sum(0);
    std::size_t i = 0;
    for (auto& [path, p] : probs) {
        if (path.size() != horizon_ + 1) {
            throw InvalidArgument("path of length " + std::to_string(path.size()) + " in a horizon-" +
                                  std::to_string(horizon_) + " path distribution");
        }
        for (const auto s : path) {
            if (s >= space_.size()) throw InvalidArgument("path state index out of range");
        }
        if (p.is_negative()) throw NegativeEntry(i, p, "path distribution");
        sum += p;
        if (!p.is_zero()) probs_.emplace(path, std::move(p));
        ++i;
    }
    if (sum != Rat(1)) throw SumNotOne(Rat(1) - sum, "path distribution");
}

Rat PathDist::probability(const Path& path) const {
    const auto it = probs_.find(path);
    return it == probs_.end() ? Rat(0) : it->second;
}

Rat PathDist::prefix_probability(std::span<const std::size_t> prefix) const {
    if (prefix.size() > horizon_ + 1) throw InvalidArgument("prefix longer than the path horizon");
    Rat total(0);
    for (const auto& [path, p] : probs_) {
        if (std::equal(prefix.begin(), prefix.end(), path.begin())) total += p;
    }
    return total;
}

PathDist PathDist::truncate(unsigned horizon) const {
    if (horizon > horizon_) throw InvalidArgument("cannot truncate to a longer horizon");
    std::map<Path, Rat> out;
    for (const auto& [path, p] : probs_) out[Path(path.begin(), path.begin() + horizon + 1)] += p;
    return PathDist(space_, horizon, std::move(out));
}

TailVector coupling_time_tail(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon) {
    require_same_space(Q.space(), theta0.space());
    const std::size_t n = Q.base_size();
    const std::size_t m = Q.pair_count();

    // Sub-probability vector of mass that has not yet met.
    std::vector<Rat> alive(m);
    for (std::size_t w = 0; w < m; ++w) {
        if (!pair_at(w, n).on_diagonal()) alive[w] = theta0[w];
    }

    TailVector tail;
    tail.entries.reserve(horizon + 1);
    for (unsigned i = 0;; ++i) {
        Rat mass(0);
        for (const auto& a : alive) mass += a;
        tail.entries.push_back(mass);
        if (i == horizon) break;

        std::vector<Rat> next(m);
        for (std::size_t from = 0; from < m; ++from) {
            if (alive[from].is_zero()) continue;
            const auto row = Q.row(from);
            for (std::size_t to = 0; to < m; ++to) {
                if (!row[to].is_zero() && !pair_at(to, n).on_diagonal()) next[to] += alive[from] * row[to];
            }
        }
        alive = std::move(next);
    }
    return tail;
}

PathDist markov_path_distribution(const Dist& mu, const StochMatrix& P, unsigned horizon, std::uint64_t limit) {
    require_same_space(mu.space(), P.space());
    const std::size_t n = P.size();
    require_within_limit(saturating_power(n, horizon + 1), limit);

    std::map<Path, Rat> probs;
    Path path;
    path.reserve(horizon + 1);
    std::function<void(const Rat&)> extend = [&](const Rat& weight) {
        if (path.size() == horizon + 1) {
            probs.emplace(path, weight);
            return;
        }
        const std::size_t from = path.back();
        for (std::size_t to = 0; to < n; ++to) {
            if (P(from, to).is_zero()) continue;
            path.push_back(to);
            extend(weight * P(from, to));
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        if (mu[s].is_zero()) continue;
        path.push_back(s);
        extend(mu[s]);
        path.pop_back();
    }
    return PathDist(mu.space(), horizon, std::move(probs));
}

StuckDecomposition stuck_path_decomposition(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                            std::uint64_t limit) {
    require_same_space(Q.space(), theta0.space());
    const std::size_t n = Q.base_size();
    const std::size_t m = Q.pair_count();
    require_within_limit(saturating_power(n, 2 * (static_cast<std::uint64_t>(horizon) + 1)), limit);

    StuckDecomposition out;
    std::vector<StatePair> walk;
    walk.reserve(horizon + 1);

    auto record = [&](const Rat& weight) {
        std::size_t meet = horizon + 1;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (walk[i].on_diagonal()) {
                meet = i;
                break;
            }
        }
        Path z(walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i) z[i] = i <= meet ? walk[i].x : walk[i].y;
        auto& buckets = out[z];
        if (buckets.empty()) buckets.resize(horizon + 2);
        buckets[meet] += weight;
    };

    std::function<void(std::size_t, const Rat&)> extend = [&](std::size_t at, const Rat& weight) {
        if (walk.size() == horizon + 1) {
            record(weight);
            return;
        }
        const auto row = Q.row(at);
        for (std::size_t to = 0; to < m; ++to) {
            if (row[to].is_zero()) continue;
            walk.push_back(pair_at(to, n));
            extend(to, weight * row[to]);
            walk.pop_back();
        }
    };
    for (std::size_t w = 0; w < m; ++w) {
        if (theta0[w].is_zero()) continue;
        walk.push_back(pair_at(w, n));
        extend(w, theta0[w]);
        walk.pop_back();
    }
    return out;
}

PathDist stuck_path_distribution(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                 std::uint64_t limit) {
    std::map<Path, Rat> probs;
    for (auto& [path, buckets] : stuck_path_decomposition(Q, theta0, horizon, limit)) {
        Rat total(0);
        for (const auto& b : buckets) total += b;
        probs.emplace(path, std::move(total));
    }
    return PathDist(theta0.space(), horizon, std::move(probs));
}

StickReport verify_sticking(const CouplingKernel& Q, const JointDist& theta0, const StochMatrix& P,
                            unsigned horizon, std::uint64_t limit) {
    require_same_space(Q.space(), P.space());
    require_same_space(theta0.space(), P.space());
    PathDist stuck = stuck_path_distribution(Q, theta0, horizon, limit);
    PathDist markov = markov_path_distribution(marginal_x(theta0), P, horizon, limit);

    std::vector<Discrepancy> discrepancies;
    auto a = stuck.probs().begin();
    auto b = markov.probs().begin();
    const auto a_end = stuck.probs().end();
    const auto b_end = markov.probs().end();
    // Merge walk over the two sorted supports.
    while (a != a_end || b != b_end) {
        if (b == b_end || (a != a_end && a->first < b->first)) {
            discrepancies.push_back({a->first, a->second, Rat(0)});
            ++a;
        } else if (a == a_end || b->first < a->first) {
            discrepancies.push_back({b->first, Rat(0), b->second});
            ++b;
        } else {
            if (a->second != b->second) discrepancies.push_back({a->first, a->second, b->second});
            ++a;
            ++b;
        }
    }
    return {std::move(discrepancies), coupling_time_tail(Q, theta0, horizon), std::move(stuck), std::move(markov)};
}

std::vector<TvBoundRow> tv_bound_report(const StochMatrix& P, const CouplingKernel& Q, const JointDist& theta0,
                                        unsigned horizon) {
    require_same_space(Q.space(), P.space());
    require_same_space(theta0.space(), P.space());
    const TailVector tail = coupling_time_tail(Q, theta0, horizon);
    Dist mu = marginal_x(theta0);
    Dist nu = marginal_y(theta0);
    std::vector<TvBoundRow> rows;
    rows.reserve(horizon + 1);
    for (unsigned i = 0; i <= horizon; ++i) {
        if (i > 0) {
            mu = evolve(mu, P);
            nu = evolve(nu, P);
        }
        Rat tv = tv_distance(mu, nu);
        const bool holds = tv <= tail[i];
        rows.push_back({i, std::move(tv), tail[i], holds});
    }
    return rows;
}

}  // namespace coupling
