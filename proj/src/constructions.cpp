#include "coupling/constructions.hpp"

#include <algorithm>

#include "coupling/errors.hpp"

namespace coupling {

CouplingKernel independent_coupling(const StochMatrix& P) {
    const std::size_t n = P.size();
    const std::size_t m = n * n;
    std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(m));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            auto& row = rows[pair_index(u, v, n)];
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) row[pair_index(x, y, n)] = P(u, x) * P(v, y);
            }
        }
    }
    return CouplingKernel(P.space(), std::move(rows));
}

CouplingKernel greedy_maximal_coupling(const StochMatrix& P) {
    const std::size_t n = P.size();
    const std::size_t m = n * n;
    std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(m));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            auto& row = rows[pair_index(u, v, n)];
            std::vector<Rat> rest_u(n);
            std::vector<Rat> rest_v(n);
            Rat residual(0);
            for (std::size_t x = 0; x < n; ++x) {
                const Rat overlap = min(P(u, x), P(v, x));
                row[pair_index(x, x, n)] = overlap;
                rest_u[x] = P(u, x) - overlap;
                rest_v[x] = P(v, x) - overlap;
                residual += rest_u[x];
            }
            if (residual.is_zero()) continue;
            // At each x one of rest_u[x], rest_v[x] is zero, so restricting the
            // product to x != y drops nothing and both marginals are exact.
            for (std::size_t x = 0; x < n; ++x) {
                if (rest_u[x].is_zero()) continue;
                for (std::size_t y = 0; y < n; ++y) {
                    if (x != y && !rest_v[y].is_zero()) row[pair_index(x, y, n)] = rest_u[x] * rest_v[y] / residual;
                }
            }
        }
    }
    return CouplingKernel(P.space(), std::move(rows));
}

CouplingKernel make_sticky_kernel(const CouplingKernel& Q, const StochMatrix& P) {
    require_same_space(Q.space(), P.space());
    const std::size_t n = P.size();
    auto rows = Q.rows();
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = rows[pair_index(s, s, n)];
        std::fill(row.begin(), row.end(), Rat(0));
        for (std::size_t t = 0; t < n; ++t) row[pair_index(t, t, n)] = P(s, t);
    }
    return CouplingKernel(P.space(), std::move(rows));
}

bool has_now_equals_forever(const CouplingKernel& Q) {
    const std::size_t n = Q.base_size();
    for (std::size_t s = 0; s < n; ++s) {
        const auto row = Q.row(pair_index(s, s, n));
        for (std::size_t to = 0; to < row.size(); ++to) {
            if (!pair_at(to, n).on_diagonal() && !row[to].is_zero()) return false;
        }
    }
    return true;
}

RosenthalFixture rosenthal_fixture() {
    const StateSpace space = StateSpace::numbered(2);
    const Rat half(1, 2);
    const Rat zero(0);
    StochMatrix P(space, {{half, half}, {half, half}});
    // Rows and columns in the order (0,0), (0,1), (1,0), (1,1).
    CouplingKernel Q(space, {
                                {half, half, zero, zero},
                                {zero, zero, half, half},
                                {zero, zero, half, half},
                                {half, half, zero, zero},
                            });
    JointDist theta(space, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    JointDist theta_prime(space, {Rat(3, 8), Rat(1, 8), Rat(1, 8), Rat(3, 8)});
    return {std::move(P), std::move(Q), std::move(theta), std::move(theta_prime)};
}

}  // namespace coupling
