#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coupling/checks.hpp"
#include "coupling/constructions.hpp"
#include "coupling/errors.hpp"
#include "coupling/io.hpp"
#include "coupling/simulator.hpp"
#include "coupling/sticking.hpp"
#include "render.hpp"

namespace coupling::cli {

using nlohmann::json;

namespace {

struct CheckOptions {
    std::string chain;
    std::string kernel;
    bool faithful = false;
    bool strong = false;
    std::string markovian;
    bool prop1 = false;
    std::optional<unsigned> horizon;
    bool json = false;
};

struct StickOptions {
    std::string chain;
    std::string kernel;
    std::string joint;
    unsigned horizon = 0;
    std::optional<std::uint64_t> limit;
    bool json = false;
};

struct BuildOptions {
    std::string chain;
    std::string construction;
    std::string base;
    std::string output;
};

struct TailOptions {
    std::string chain;
    std::string kernel;
    std::string joint;
    unsigned horizon = 0;
    bool json = false;
};

struct SimulateOptions {
    std::string chain;
    std::string kernel;
    std::string joint;
    unsigned horizon = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string event;
    unsigned workers = 1;
    std::optional<std::uint64_t> limit;
    bool json = false;
};

struct Inputs {
    StochMatrix P;
    CouplingKernel Q;
};

Inputs load_chain_and_kernel(const std::string& chain, const std::string& kernel) {
    Inputs in{io::load_chain(chain), io::load_kernel(kernel)};
    require_same_space(in.P.space(), in.Q.space());
    return in;
}

JointDist load_joint_for(const std::string& file, const StateSpace& space) {
    JointDist theta = io::load_joint(file);
    require_same_space(theta.space(), space);
    return theta;
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

std::string fixed(double x) {
    std::ostringstream s;
    s << std::setprecision(6) << std::fixed << x;
    return s.str();
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
    const auto [P, Q] = load_chain_and_kernel(o.chain, o.kernel);
    std::string name;
    CheckReport report;
    if (o.faithful) {
        name = "faithful";
        report = check_faithful(Q, P);
    } else if (o.strong) {
        name = "strong";
        report = check_strong_markovian(Q, P);
    } else {
        if (!o.horizon) throw InvalidArgument("--horizon is required with --markovian and --prop1");
        if (!o.markovian.empty()) {
            name = "markovian";
            const JointDist theta0 = load_joint_for(o.markovian, P.space());
            report = check_markovian_for(Q, P, theta0, *o.horizon);
            if (!o.json) {
                JointDist theta = theta0;
                for (unsigned i = 1; i <= *o.horizon; ++i) {
                    theta = evolve_joint(theta, Q);
                    out << "theta_" << i << " = " << format_vector(theta.probs()) << "\n";
                }
            }
        } else {
            name = "prop1";
            report = check_proposition_condition(Q, P, *o.horizon);
        }
    }
    if (o.json) {
        json j = check_to_json(name, report, P.space());
        if (o.horizon && name != "faithful" && name != "strong") j["horizon"] = *o.horizon;
        out << j.dump(2) << "\n";
    } else {
        print_check(out, name, report, P.space());
        if (o.horizon && report.verdict() && (name == "markovian" || name == "prop1")) {
            out << "(certified up to horizon " << *o.horizon << " only)\n";
        }
    }
    return report.verdict() ? kExitTrue : kExitFalse;
}

int cmd_stick_verify(const StickOptions& o, std::ostream& out) {
    const auto [P, Q] = load_chain_and_kernel(o.chain, o.kernel);
    const JointDist theta0 = load_joint_for(o.joint, P.space());
    const StickReport report = verify_sticking(Q, theta0, P, o.horizon, resolve_limit(o.limit));
    if (o.json) {
        out << stick_to_json(report, P.space()).dump(2) << "\n";
    } else {
        print_stick(out, report, P.space());
    }
    return report.verdict() ? kExitTrue : kExitFalse;
}

int cmd_build(const BuildOptions& o, std::ostream& out) {
    const StochMatrix P = io::load_chain(o.chain);
    std::optional<CouplingKernel> built;
    if (o.construction == "independent") {
        built = independent_coupling(P);
    } else if (o.construction == "greedy") {
        built = greedy_maximal_coupling(P);
    } else {
        if (o.base.empty()) throw InvalidArgument("--construction sticky needs --base <kernel file>");
        built = make_sticky_kernel(io::load_kernel(o.base), P);
    }
    const std::string text = io::format_kernel(*built);
    if (o.output.empty()) {
        out << text;
    } else {
        io::write_file(o.output, text);
    }
    return kExitTrue;
}

int cmd_tail(const TailOptions& o, std::ostream& out) {
    const auto [P, Q] = load_chain_and_kernel(o.chain, o.kernel);
    const JointDist theta0 = load_joint_for(o.joint, P.space());
    const auto rows = tv_bound_report(P, Q, theta0, o.horizon);
    const bool sticky = has_now_equals_forever(Q);
    if (o.json) {
        out << json{{"now_equals_forever", sticky}, {"rows", tv_rows_to_json(rows)}}.dump(2) << "\n";
    } else {
        print_tv_rows(out, rows);
        if (!sticky) out << "(kernel lacks now-equals-forever; the bound column is informational)\n";
    }
    return kExitTrue;
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
    const auto [P, Q] = load_chain_and_kernel(o.chain, o.kernel);
    const JointDist theta0 = load_joint_for(o.joint, P.space());
    const Seed seed{o.seed};
    const TailVector exact_tail = coupling_time_tail(Q, theta0, o.horizon);

    json tail_rows = json::array();
    std::ostringstream human;
    human << "samples " << o.samples << ", seed " << o.seed << "\n";
    for (unsigned i = 0; i <= o.horizon; ++i) {
        const auto est = estimate_tail(Q, theta0, i, o.samples, seed, o.workers);
        tail_rows.push_back({{"step", i},
                             {"estimate", est.estimate},
                             {"standard_error", est.standard_error},
                             {"exact", io::rat_to_json(exact_tail[i])}});
        human << "Pr(T>" << i << ") ~ " << fixed(est.estimate) << " +/- " << fixed(est.standard_error) << "   exact "
              << exact_tail[i] << " (" << fixed(exact_tail[i].to_double()) << ")\n";
    }
    json doc{{"samples", o.samples}, {"seed", o.seed}, {"tail", std::move(tail_rows)}};

    if (!o.event.empty()) {
        const auto prefix = split_labels(o.event);
        const auto est = estimate_stuck_event(Q, theta0, prefix, o.samples, seed, o.workers);
        json ev{{"prefix", o.event}, {"estimate", est.estimate}, {"standard_error", est.standard_error}};
        human << "Pr(Z=" << o.event << ") ~ " << fixed(est.estimate) << " +/- " << fixed(est.standard_error);

        Path target;
        for (const auto& label : prefix) target.push_back(P.space().index(label));
        const auto horizon = static_cast<unsigned>(target.size() - 1);
        try {
            const auto limit = resolve_limit(o.limit);
            const Rat stuck = stuck_path_distribution(Q, theta0, horizon, limit).prefix_probability(target);
            const Rat markov = markov_path_distribution(marginal_x(theta0), P, horizon, limit).prefix_probability(target);
            ev["exact_stuck"] = io::rat_to_json(stuck);
            ev["exact_markov"] = io::rat_to_json(markov);
            human << "   exact stuck " << stuck << " (" << fixed(stuck.to_double()) << "), markov " << markov;
        } catch (const EnumerationLimitExceeded&) {
            human << "   exact: beyond enumeration limit";
        }
        human << "\n";
        doc["event"] = std::move(ev);
    }
    out << (o.json ? doc.dump(2) + "\n" : human.str());
    return kExitTrue;
}

}  // namespace

std::uint64_t resolve_limit(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("COUPLING_LAB_LIMIT"); env && *env) {
        std::uint64_t value = 0;
        const std::string_view text(env);
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size()) {
            throw ParseError("COUPLING_LAB_LIMIT must be a non-negative integer, got '" + std::string(text) + "'");
        }
        return value;
    }
    return kDefaultEnumerationLimit;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction, verification and simulation of finite Markov chain couplings",
                 "coupling_lab"};
    app.require_subcommand(1);

    CheckOptions check_opts;
    auto* check = app.add_subcommand("check", "Decide faithful / strong / Markovian / point-mass properties of a kernel");
    check->add_option("chain", check_opts.chain, "Chain file")->required();
    check->add_option("kernel", check_opts.kernel, "Kernel file")->required();
    auto* mode = check->add_option_group("mode");
    mode->add_flag("--faithful", check_opts.faithful, "Row-marginal sums equal the rows of P");
    mode->add_flag("--strong", check_opts.strong, "theta Q couples (mu P, nu P) for every coupling theta");
    mode->add_option("--markovian", check_opts.markovian, "Marginals of theta_0 Q^i follow P^i (joint file)");
    mode->add_flag("--prop1", check_opts.prop1, "From every (s,s), both marginals follow delta_s P^i");
    mode->require_option(1);
    check->add_option("--horizon", check_opts.horizon, "Steps to check")->check(CLI::PositiveNumber);
    check->add_flag("--json", check_opts.json, "Machine-readable output");

    StickOptions stick_opts;
    auto* stick = app.add_subcommand("stick-verify", "Compare the stuck path law with Markov(mu, P)");
    stick->add_option("chain", stick_opts.chain, "Chain file")->required();
    stick->add_option("kernel", stick_opts.kernel, "Kernel file")->required();
    stick->add_option("joint", stick_opts.joint, "Initial joint distribution file")->required();
    stick->add_option("--horizon", stick_opts.horizon, "Path horizon")->required();
    stick->add_option("--limit", stick_opts.limit, "Enumeration limit in weighted terms");
    stick->add_flag("--json", stick_opts.json, "Machine-readable output");

    BuildOptions build_opts;
    auto* build = app.add_subcommand("build", "Construct a coupling kernel and write it as a kernel file");
    build->add_option("chain", build_opts.chain, "Chain file")->required();
    build->add_option("--construction", build_opts.construction, "independent | greedy | sticky")
        ->required()
        ->check(CLI::IsMember({"independent", "greedy", "sticky"}));
    build->add_option("--base", build_opts.base, "Kernel to make sticky");
    build->add_option("-o,--output", build_opts.output, "Output file (default: stdout)");

    TailOptions tail_opts;
    auto* tail = app.add_subcommand("tail", "Exact Pr(T > i) beside tv(mu P^i, nu P^i)");
    tail->add_option("chain", tail_opts.chain, "Chain file")->required();
    tail->add_option("kernel", tail_opts.kernel, "Kernel file")->required();
    tail->add_option("joint", tail_opts.joint, "Initial joint distribution file")->required();
    tail->add_option("--horizon", tail_opts.horizon, "Last step")->required();
    tail->add_flag("--json", tail_opts.json, "Machine-readable output");

    SimulateOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates of tails and stuck events");
    simulate->add_option("chain", sim_opts.chain, "Chain file")->required();
    simulate->add_option("kernel", sim_opts.kernel, "Kernel file")->required();
    simulate->add_option("joint", sim_opts.joint, "Initial joint distribution file")->required();
    simulate->add_option("--samples", sim_opts.samples, "Number of sampled paths")->required();
    simulate->add_option("--seed", sim_opts.seed, "64-bit seed")->required();
    simulate->add_option("--horizon", sim_opts.horizon, "Last tail step (default 0)");
    simulate->add_option("--event", sim_opts.event, "Stuck-path prefix, comma-separated labels");
    simulate->add_option("--workers", sim_opts.workers, "Threads (0 = all cores)");
    simulate->add_option("--limit", sim_opts.limit, "Enumeration limit for the exact column");
    simulate->add_flag("--json", sim_opts.json, "Machine-readable output");

    bool demo_json = false;
    auto* demo = app.add_subcommand("demo-rosenthal", "Replay the two-state counterexample and assert its outcomes");
    demo->add_flag("--json", demo_json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitTrue : kExitInputError;
    }

    try {
        if (*check) return cmd_check(check_opts, out);
        if (*stick) return cmd_stick_verify(stick_opts, out);
        if (*build) return cmd_build(build_opts, out);
        if (*tail) return cmd_tail(tail_opts, out);
        if (*simulate) return cmd_simulate(sim_opts, out);
        if (*demo) return run_rosenthal_demo(out, demo_json);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace coupling::cli
