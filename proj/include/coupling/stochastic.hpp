#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coupling/rational.hpp"

namespace coupling {

/// Ordered set of distinct, non-empty state labels. Labels may not contain
/// ',' because paths are serialized as comma-joined labels.
///
/// Copies share the label storage, so passing spaces around by value is cheap.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);

    /// Labels "0", "1", ..., "n-1".
    static StateSpace numbered(std::size_t n);

    std::size_t size() const { return labels_->size(); }
    const std::vector<std::string>& labels() const { return *labels_; }
    const std::string& label(std::size_t index) const { return labels_->at(index); }

    /// Throws UnknownState.
    std::size_t index(std::string_view label) const;
    bool contains(std::string_view label) const;

    friend bool operator==(const StateSpace& a, const StateSpace& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Throws SpaceMismatch unless a == b.
void require_same_space(const StateSpace& a, const StateSpace& b);

/// Validated probability vector. Construction checks non-negativity and an
/// exact unit sum, so every Dist in existence is a probability distribution.
class Dist {
public:
    /// Throws InvalidArgument on length mismatch, NegativeEntry, SumNotOne.
    Dist(StateSpace space, std::vector<Rat> probs);

    const StateSpace& space() const { return space_; }
    std::size_t size() const { return probs_.size(); }
    const std::vector<Rat>& probs() const { return probs_; }
    const Rat& operator[](std::size_t i) const { return probs_[i]; }
    const Rat& at(std::string_view label) const { return probs_[space_.index(label)]; }

    friend bool operator==(const Dist& a, const Dist& b) {
        return a.space_ == b.space_ && a.probs_ == b.probs_;
    }

private:
    StateSpace space_;
    std::vector<Rat> probs_;
};

/// Row-stochastic n x n matrix over a StateSpace, stored row-major.
class StochMatrix {
public:
    /// rows must be n rows of n entries. Throws InvalidArgument on shape
    /// errors, NegativeEntry / SumNotOne naming the offending row.
    StochMatrix(StateSpace space, std::vector<std::vector<Rat>> rows);

    static StochMatrix identity(const StateSpace& space);

    const StateSpace& space() const { return space_; }
    std::size_t size() const { return space_.size(); }
    const Rat& operator()(std::size_t from, std::size_t to) const { return entries_[from * size() + to]; }
    std::span<const Rat> row(std::size_t from) const {
        return std::span<const Rat>(entries_).subspan(from * size(), size());
    }
    /// Row `from` as a distribution, i.e. delta(from) * P.
    Dist row_dist(std::size_t from) const;

    friend bool operator==(const StochMatrix& a, const StochMatrix& b) {
        return a.space_ == b.space_ && a.entries_ == b.entries_;
    }

private:
    StateSpace space_;
    std::vector<Rat> entries_;
};

/// Validates entries of a would-be distribution. `where` prefixes error text.
void validate_probability_vector(std::span<const Rat> probs, const std::string& where = {});

Dist make_dist(const StateSpace& space, std::vector<Rat> probs);

/// Point mass at `state`. Throws UnknownState.
Dist delta(const StateSpace& space, std::string_view state);
Dist delta(const StateSpace& space, std::size_t index);

Dist uniform(const StateSpace& space);

/// mu * P.
Dist evolve(const Dist& mu, const StochMatrix& P);

/// mu * P^steps by repeated exact evolution.
Dist evolve_n(const Dist& mu, const StochMatrix& P, unsigned steps);

/// Half-L1 distance.
Rat tv_distance(const Dist& mu, const Dist& nu);

}  // namespace coupling
