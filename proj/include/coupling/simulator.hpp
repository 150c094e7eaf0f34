#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "coupling/kernel.hpp"
#include "coupling/rational.hpp"

namespace coupling {

struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, output
/// is the state passed through mix64. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// SplitMix64 output finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Independent stream for replica `replica`: a SplitMix64 whose initial state
/// is mix64(seed ^ mix64(replica + 0x9E3779B97F4A7C15)). Results depend only
/// on (seed, replica), never on how replicas are spread over threads.
SplitMix64 substream(Seed seed, std::uint64_t replica);

/// Inverse-CDF sampler over a finite rational distribution. The CDF is built
/// once in double precision; the last positive cell absorbs rounding slack,
/// and zero-probability cells are never returned.
class CategoricalSampler {
public:
    explicit CategoricalSampler(std::span<const Rat> probs);

    std::size_t operator()(SplitMix64& rng) const;

private:
    std::vector<double> cdf_;
};

/// Cached samplers for theta0 and every row of Q.
class CoupledSampler {
public:
    CoupledSampler(const CouplingKernel& Q, const JointDist& theta0);

    std::size_t base_size() const { return n_; }

    /// w_0 ~ theta0, w_{i+1} ~ Q(w_i, .), for i < horizon.
    std::vector<StatePair> sample(unsigned horizon, SplitMix64& rng) const;

private:
    std::size_t n_;
    CategoricalSampler initial_;
    std::vector<CategoricalSampler> rows_;
};

struct MonteCarloEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;

    /// Bernoulli estimate: hits / samples with sqrt(p (1 - p) / samples).
    static MonteCarloEstimate from_counts(std::uint64_t hits, std::uint64_t samples);
};

std::vector<StatePair> sample_coupled_path(const CouplingKernel& Q, const JointDist& theta0, unsigned horizon,
                                           SplitMix64& rng);

/// Z-path of a sampled pair path: x_i up to and including the first meeting,
/// y_i afterwards.
std::vector<std::size_t> stuck_path(std::span<const StatePair> walk);

/// Fraction of sampled paths with x_j != y_j for every j <= step.
/// Throws ZeroSamples when samples == 0. workers == 0 means one thread per
/// hardware core.
MonteCarloEstimate estimate_tail(const CouplingKernel& Q, const JointDist& theta0, unsigned step,
                                 std::uint64_t samples, Seed seed, unsigned workers = 1);

/// Fraction of sampled paths whose stuck path starts with `prefix` (state
/// labels). Throws UnknownState, ZeroSamples, InvalidArgument on an empty
/// prefix.
MonteCarloEstimate estimate_stuck_event(const CouplingKernel& Q, const JointDist& theta0,
                                        const std::vector<std::string>& prefix, std::uint64_t samples, Seed seed,
                                        unsigned workers = 1);

}  // namespace coupling
