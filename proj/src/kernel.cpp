#include "coupling/kernel.hpp"

#include <iterator>
#include <string>

#include "coupling/errors.hpp"

namespace coupling {

namespace {

std::string pair_name(const StateSpace& base, std::size_t pair) {
    const auto p = pair_at(pair, base.size());
    return "(" + base.label(p.x) + "," + base.label(p.y) + ")";
}

}  // namespace

JointDist::JointDist(StateSpace base, std::vector<Rat> probs) : base_(std::move(base)), probs_(std::move(probs)) {
    const std::size_t n = base_.size();
    if (probs_.size() != n * n) {
        throw InvalidArgument("joint distribution has " + std::to_string(probs_.size()) + " entries, expected " +
                              std::to_string(n * n));
    }
    validate_probability_vector(probs_, "joint distribution");
}

JointDist JointDist::point(const StateSpace& base, std::size_t x, std::size_t y) {
    const std::size_t n = base.size();
    if (x >= n || y >= n) throw InvalidArgument("state index out of range");
    std::vector<Rat> probs(n * n);
    probs[pair_index(x, y, n)] = Rat(1);
    return JointDist(base, std::move(probs));
}

Rat JointDist::off_diagonal_mass() const {
    const std::size_t n = base_size();
    Rat mass(0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) mass += (*this)(x, y);
        }
    }
    return mass;
}

CouplingKernel::CouplingKernel(StateSpace base, std::vector<std::vector<Rat>> rows) : base_(std::move(base)) {
    const std::size_t m = pair_count();
    if (rows.size() != m) {
        throw InvalidArgument("kernel has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(m));
    }
    entries_.reserve(m * m);
    for (std::size_t r = 0; r < m; ++r) {
        if (rows[r].size() != m) {
            throw InvalidArgument("kernel row " + pair_name(base_, r) + " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(m));
        }
        validate_probability_vector(rows[r], "kernel row " + pair_name(base_, r));
        std::move(rows[r].begin(), rows[r].end(), std::back_inserter(entries_));
    }
}

std::vector<std::vector<Rat>> CouplingKernel::rows() const {
    std::vector<std::vector<Rat>> out;
    out.reserve(pair_count());
    for (std::size_t r = 0; r < pair_count(); ++r) {
        const auto cells = row(r);
        out.emplace_back(cells.begin(), cells.end());
    }
    return out;
}

Dist marginal_x(const JointDist& theta) {
    const std::size_t n = theta.base_size();
    std::vector<Rat> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out[x] += theta(x, y);
    }
    return Dist(theta.space(), std::move(out));
}

Dist marginal_y(const JointDist& theta) {
    const std::size_t n = theta.base_size();
    std::vector<Rat> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out[y] += theta(x, y);
    }
    return Dist(theta.space(), std::move(out));
}

JointDist product_joint(const Dist& mu, const Dist& nu) {
    require_same_space(mu.space(), nu.space());
    const std::size_t n = mu.size();
    std::vector<Rat> probs(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) probs[pair_index(x, y, n)] = mu[x] * nu[y];
    }
    return JointDist(mu.space(), std::move(probs));
}

JointDist evolve_joint(const JointDist& theta, const CouplingKernel& Q) {
    require_same_space(theta.space(), Q.space());
    const std::size_t m = Q.pair_count();
    std::vector<Rat> out(m);
    for (std::size_t from = 0; from < m; ++from) {
        if (theta[from].is_zero()) continue;
        const auto row = Q.row(from);
        for (std::size_t to = 0; to < m; ++to) {
            if (!row[to].is_zero()) out[to] += theta[from] * row[to];
        }
    }
    return JointDist(theta.space(), std::move(out));
}

}  // namespace coupling
