#include "coupling/stochastic.hpp"

#include <algorithm>
#include <unordered_set>

#include "coupling/errors.hpp"

namespace coupling {

StateSpace::StateSpace(std::vector<std::string> labels) {
    if (labels.empty()) throw InvalidArgument("state space must have at least one state");
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (label.empty()) throw InvalidArgument("empty state label");
        if (label.find(',') != std::string::npos) {
            throw InvalidArgument("state label '" + label + "' contains ','");
        }
        if (!seen.insert(label).second) throw InvalidArgument("duplicate state label '" + label + "'");
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

StateSpace StateSpace::numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return StateSpace(std::move(labels));
}

std::size_t StateSpace::index(std::string_view label) const {
    const auto& ls = *labels_;
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) throw UnknownState(std::string(label));
    return static_cast<std::size_t>(it - ls.begin());
}

bool StateSpace::contains(std::string_view label) const {
    return std::find(labels_->begin(), labels_->end(), label) != labels_->end();
}

void require_same_space(const StateSpace& a, const StateSpace& b) {
    if (!(a == b)) throw SpaceMismatch();
}

void validate_probability_vector(std::span<const Rat> probs, const std::string& where) {
    Rat sum(0);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i].is_negative()) throw NegativeEntry(i, probs[i], where);
        sum += probs[i];
    }
    if (sum != Rat(1)) throw SumNotOne(Rat(1) - sum, where);
}

Dist::Dist(StateSpace space, std::vector<Rat> probs) : space_(std::move(space)), probs_(std::move(probs)) {
    if (probs_.size() != space_.size()) {
        throw InvalidArgument("distribution has " + std::to_string(probs_.size()) + " entries, space has " +
                              std::to_string(space_.size()) + " states");
    }
    validate_probability_vector(probs_);
}

StochMatrix::StochMatrix(StateSpace space, std::vector<std::vector<Rat>> rows) : space_(std::move(space)) {
    const std::size_t n = space_.size();
    if (rows.size() != n) {
        throw InvalidArgument("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    }
    entries_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw InvalidArgument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
        }
        validate_probability_vector(rows[i], "row " + space_.label(i));
        std::move(rows[i].begin(), rows[i].end(), std::back_inserter(entries_));
    }
}

StochMatrix StochMatrix::identity(const StateSpace& space) {
    const std::size_t n = space.size();
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = Rat(1);
    return StochMatrix(space, std::move(rows));
}

Dist StochMatrix::row_dist(std::size_t from) const {
    const auto r = row(from);
    return Dist(space_, std::vector<Rat>(r.begin(), r.end()));
}

Dist make_dist(const StateSpace& space, std::vector<Rat> probs) { return Dist(space, std::move(probs)); }

Dist delta(const StateSpace& space, std::string_view state) { return delta(space, space.index(state)); }

Dist delta(const StateSpace& space, std::size_t index) {
    if (index >= space.size()) throw InvalidArgument("state index out of range");
    std::vector<Rat> probs(space.size());
    probs[index] = Rat(1);
    return Dist(space, std::move(probs));
}

Dist uniform(const StateSpace& space) {
    const long n = static_cast<long>(space.size());
    return Dist(space, std::vector<Rat>(space.size(), Rat(1, n)));
}

Dist evolve(const Dist& mu, const StochMatrix& P) {
    require_same_space(mu.space(), P.space());
    const std::size_t n = P.size();
    std::vector<Rat> out(n);
    for (std::size_t from = 0; from < n; ++from) {
        if (mu[from].is_zero()) continue;
        for (std::size_t to = 0; to < n; ++to) {
            if (!P(from, to).is_zero()) out[to] += mu[from] * P(from, to);
        }
    }
    return Dist(mu.space(), std::move(out));
}

Dist evolve_n(const Dist& mu, const StochMatrix& P, unsigned steps) {
    require_same_space(mu.space(), P.space());
    Dist current = mu;
    for (unsigned i = 0; i < steps; ++i) current = evolve(current, P);
    return current;
}

Rat tv_distance(const Dist& mu, const Dist& nu) {
    require_same_space(mu.space(), nu.space());
    Rat total(0);
    for (std::size_t i = 0; i < mu.size(); ++i) total += abs(mu[i] - nu[i]);
    return total / Rat(2);
}

}  // namespace coupling
