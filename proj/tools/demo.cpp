#include <json.hpp>

#include "cli.hpp"
#include "coupling/checks.hpp"
#include "coupling/constructions.hpp"
#include "coupling/sticking.hpp"
#include "render.hpp"

namespace coupling::cli {

namespace {

class Narrative {
public:
    void expect(const std::string& claim, bool ok, const std::string& detail) {
        all_ok_ = all_ok_ && ok;
        steps_.push_back({{"claim", claim}, {"ok", ok}, {"detail", detail}});
    }

    bool all_ok() const { return all_ok_; }

    void print(std::ostream& out, bool json) const {
        if (json) {
            out << nlohmann::json{{"ok", all_ok_}, {"steps", steps_}}.dump(2) << "\n";
            return;
        }
        out << "Rosenthal counterexample: states {0,1}, P(i,j) = 1/2, X' = X xor Y, Y' uniform\n";
        for (const auto& s : steps_) {
            out << (s["ok"].get<bool>() ? "[ok]   " : "[FAIL] ") << s["claim"].get<std::string>() << "\n"
                << "       " << s["detail"].get<std::string>() << "\n";
        }
        out << (all_ok_ ? "all expected outcomes hold\n" : "some expected outcomes did NOT hold\n");
    }

private:
    bool all_ok_ = true;
    nlohmann::json steps_ = nlohmann::json::array();
};

std::string vec(const Dist& d) { return format_vector(d.probs()); }
std::string vec(const JointDist& d) { return format_vector(d.probs()); }

}  // namespace

int run_rosenthal_demo(std::ostream& out, bool json) {
    const auto [P, Q, theta, theta_prime] = rosenthal_fixture();
    const StateSpace& space = P.space();
    Narrative story;

    // theta is invariant, so the Markovian check passes at every horizon.
    const JointDist theta_q = evolve_joint(theta, Q);
    const auto markov_theta = check_markovian_for(Q, P, theta, 4);
    story.expect("theta Q = theta and Q is Markovian from theta", theta_q == theta && markov_theta.verdict(),
                 "theta Q = " + vec(theta_q) + "; check --markovian --horizon 4: " +
                     (markov_theta.verdict() ? "PASS" : "FAIL"));

    // Same marginals, different coupling: X no longer follows P.
    const JointDist prime_q = evolve_joint(theta_prime, Q);
    const JointDist expected_prime_q(space, {Rat(3, 8), Rat(3, 8), Rat(1, 8), Rat(1, 8)});
    const auto markov_prime = check_markovian_for(Q, P, theta_prime, 1);
    const bool prime_fails_at_step1 =
        !markov_prime.verdict() && markov_prime.violations.front().step == 1u &&
        markov_prime.violations.front().side == Side::x &&
        markov_prime.violations.front().actual_marginal == std::vector<Rat>{Rat(3, 4), Rat(1, 4)};
    story.expect("theta' Q = [3/8, 3/8, 1/8, 1/8] breaks the X-marginal at step 1",
                 prime_q == expected_prime_q && marginal_x(prime_q) == Dist(space, {Rat(3, 4), Rat(1, 4)}) &&
                     marginal_y(prime_q) == uniform(space) && prime_fails_at_step1,
                 "theta' Q = " + vec(prime_q) + ", X-marginal " + vec(marginal_x(prime_q)) + " vs mu P = " +
                     vec(uniform(space)));

    const auto faithful = check_faithful(Q, P);
    bool row01 = false;
    for (const auto& v : faithful.violations) {
        if (v.row_pair == StatePair{0, 1} && v.side == Side::x && v.target == 0 && v.expected == Rat(1, 2) &&
            v.actual == Rat(0)) {
            row01 = true;
        }
    }
    const auto strong = check_strong_markovian(Q, P);
    story.expect("Q is not faithful (and not strong Markovian)", !faithful.verdict() && row01 && !strong.verdict(),
                 "row (0,1): sum_j' Q((0,1),(0,j')) = 0, expected P(0,0) = 1/2; " +
                     std::to_string(faithful.violations.size()) + " faithfulness violations");

    const JointDist eta1 = evolve_joint(JointDist::point(space, 0, 0), Q);
    const auto prop = check_proposition_condition(Q, P, 1);
    const bool prop_fails = !prop.verdict() && prop.violations.front().source == 0u &&
                            prop.violations.front().step == 1u;
    story.expect("the point-mass condition fails from (0,0)",
                 eta1 == JointDist(space, {Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)}) &&
                     marginal_x(eta1) == delta(space, 0) && evolve(delta(space, 0), P) == uniform(space) && prop_fails,
                 "eta_1 = " + vec(eta1) + ", X-marginal " + vec(marginal_x(eta1)) + " != delta_0 P = " +
                     vec(evolve(delta(space, 0), P)));

    const Path z{1, 0};
    const auto split = stuck_path_decomposition(Q, theta, 1);
    const auto it = split.find(z);
    const Rat met_at_0 = it == split.end() ? Rat(0) : it->second[0];
    const Rat met_later = it == split.end() ? Rat(0) : it->second[1] + it->second[2];
    const StickReport stick = verify_sticking(Q, theta, P, 1);
    const Rat stuck = stick.stuck.probability(z);
    const Rat markov = stick.markov.probability(z);
    story.expect("sticking fails: Pr(Z0=1, Z1=0) = 1/8 + 0, not 1/4",
                 stuck == Rat(1, 8) && met_at_0 == Rat(1, 8) && met_later == Rat(0) && markov == Rat(1, 4) &&
                     !stick.verdict(),
                 "stuck Pr(Z0=1,Z1=0) = " + stuck.to_string() + ", expected " + markov.to_string() + " (T=0: " +
                     met_at_0.to_string() + ", T>0: " + met_later.to_string() + ")");

    story.print(out, json);
    return story.all_ok() ? kExitTrue : kExitFalse;
}

}  // namespace coupling::cli
