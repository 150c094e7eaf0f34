#include "coupling/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "coupling/errors.hpp"

namespace coupling {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Counts replicas r in [0, samples) for which hit(rng_r) is true. Replicas are
// split into contiguous blocks, one per worker; integer counts merge exactly.
std::uint64_t count_hits(std::uint64_t samples, Seed seed, unsigned workers,
                         const std::function<bool(SplitMix64&)>& hit) {
    if (samples == 0) throw ZeroSamples();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));

    auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t r = begin; r < end; ++r) {
            SplitMix64 rng = substream(seed, r);
            if (hit(rng)) ++hits;
        }
        return hits;
    };
    if (workers == 1) return run_block(0, samples);

    std::vector<std::uint64_t> partial(workers, 0);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = samples * w / workers;
            const std::uint64_t end = samples * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { partial[w] = run_block(begin, end); });
        }
    }
    std::uint64_t hits = 0;
    for (const auto h : partial) hits += h;
    return hits;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64::result_type SplitMix64::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

SplitMix64 substream(Seed seed, std::uint64_t replica) { return SplitMix64(mix64(seed.value ^ mix64(replica + kGolden))); }

CategoricalSampler::CategoricalSampler(std::span<const Rat> probs) {
    cdf_.reserve(probs.size());
    double running = 0.0;
    std::size_t last_positive = probs.size();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i].to_double();
        cdf_.push_back(running);
        if (!probs[i].is_zero()) last_positive = i;
    }
    if (last_positive == probs.size()) throw InvalidArgument("cannot sample from an all-zero vector");
    // u < 1 always, so a bound above 1 makes the last positive cell take the slack.
    for (std::size_t i = last_positive; i < cdf_.size(); ++i) cdf_[i] = 2.0;
}

std::size_t CategoricalSampler::operator()(SplitMix64& rng) const {
    const double u = rng.next_unit();
    return static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

CoupledSampler::CoupledSampler(const CouplingKernel& Q, const JointDist& theta0)
    : n_(Q.base_size()), initial_(theta0.probs()) {
    require_same_space(Q.space(), theta0.space());
    rows_.reserve(Q.pair_count());
    for (std::size_t w = 0; w < Q.pair_count(); ++w) rows_.emplace_back(Q.row(w));
}

std::vector<StatePair> CoupledSampler::sample(unsigned horizon, SplitMix64& rng) const {
    std::vector<StatePair> walk;
    walk.reserve(horizon + 1);
    std::size_t w = initial_(rng);
    walk.push_back(pair_at(w, n_));
    for (unsigned i = 0; i < horizon; ++i) {
        w = rows_[w](rng);
        walk.push_back(pair_at(w, n_));
    }
    return walk;
}

MonteCarloEstimate MonteCarloEstimate::from_counts(std::uint64_t hits, std::uint64_t samples) {
    if (samples == 0) throw ZeroSamples();
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

std::vector<StatePair> sample_coupled_path(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                           SplitMix64& rng) {
    return CoupledSampler(Q, theta0).sample(horizon, rng);
}

std::vector<std::size_t> stuck_path(std::span<const StatePair> walk) {
    std::vector<std::size_t> z(walk.size());
    bool met = false;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        z[i] = met ? walk[i].y : walk[i].x;
        met = met || walk[i].on_diagonal();
    }
    return z;
}

MonteCarloEstimate estimate_tail(const CouplingKernel& Q, const JointDist& theta0, unsigned step,
                                 std::uint64_t samples, Seed seed, unsigned workers) {
    if (samples == 0) throw ZeroSamples();
    const CoupledSampler sampler(Q, theta0);
    const auto hits = count_hits(samples, seed, workers, [&](SplitMix64& rng) {
        const auto walk = sampler.sample(step, rng);
        return std::none_of(walk.begin(), walk.end(), [](const StatePair& w) { return w.on_diagonal(); });
    });
    return MonteCarloEstimate::from_counts(hits, samples);
}

MonteCarloEstimate estimate_stuck_event(const CouplingKernel& Q, const JointDist& theta0,
                                        const std::vector<std::string>& prefix, std::uint64_t samples, Seed seed,
                                        unsigned workers) {
    if (prefix.empty()) throw InvalidArgument("stuck-event prefix must name at least one state");
    std::vector<std::size_t> target;
    target.reserve(prefix.size());
    for (const auto& label : prefix) target.push_back(Q.space().index(label));
    if (samples == 0) throw ZeroSamples();

    const CoupledSampler sampler(Q, theta0);
    const auto horizon = static_cast<unsigned>(target.size() - 1);
    const auto hits = count_hits(samples, seed, workers, [&](SplitMix64& rng) {
        const auto walk = sampler.sample(horizon, rng);
        return stuck_path(walk) == target;
    });
    return MonteCarloEstimate::from_counts(hits, samples);
}

}  // namespace coupling
