#include "render.hpp"

#include <tuple>

#include "coupling/io.hpp"

namespace coupling::cli {

using nlohmann::json;

namespace {

const char* side_name(Side side) { return side == Side::x ? "X" : "Y"; }

std::string location(const Violation& v, const StateSpace& space) {
    std::string out;
    auto add = [&](const std::string& part) { out += out.empty() ? part : " " + part; };
    if (v.source) add("from (" + space.label(*v.source) + "," + space.label(*v.source) + ")");
    if (v.step) add("step " + std::to_string(*v.step));
    if (v.row_pair) add("row " + pair_label(space, *v.row_pair));
    return out;
}

auto group_key(const Violation& v) { return std::make_tuple(v.source, v.step, v.row_pair, v.side); }

}  // namespace

std::string format_vector(std::span<const Rat> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += xs[i].to_string();
    }
    return out + "]";
}

std::string pair_label(const StateSpace& space, StatePair p) {
    return "(" + space.label(p.x) + "," + space.label(p.y) + ")";
}

void print_check(std::ostream& out, const std::string& name, const CheckReport& report, const StateSpace& space) {
    out << "check " << name << ": " << (report.verdict() ? "PASS" : "FAIL");
    if (!report.verdict()) out << " (" << report.violations.size() << " violations)";
    out << "\n";
    const Violation* previous = nullptr;
    for (const auto& v : report.violations) {
        if (!v.actual_marginal.empty()) {
            // Marginal checks: one line per offending marginal.
            if (previous && group_key(*previous) == group_key(v)) continue;
            out << "  " << location(v, space) << " " << side_name(v.side) << "-marginal: expected "
                << format_vector(v.expected_marginal) << ", actual " << format_vector(v.actual_marginal) << "\n";
        } else {
            out << "  " << location(v, space) << " " << side_name(v.side) << "-sum into " << space.label(v.target)
                << ": expected " << v.expected << ", actual " << v.actual << "\n";
        }
        previous = &v;
    }
}

json check_to_json(const std::string& name, const CheckReport& report, const StateSpace& space) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json j;
        if (v.row_pair) j["row_pair"] = {space.label(v.row_pair->x), space.label(v.row_pair->y)};
        if (v.source) j["source"] = space.label(*v.source);
        if (v.step) j["step"] = *v.step;
        j["side"] = v.side == Side::x ? "x" : "y";
        j["target"] = space.label(v.target);
        j["expected"] = io::rat_to_json(v.expected);
        j["actual"] = io::rat_to_json(v.actual);
        if (!v.actual_marginal.empty()) {
            j["expected_marginal"] = io::rats_to_json(v.expected_marginal);
            j["actual_marginal"] = io::rats_to_json(v.actual_marginal);
        }
        violations.push_back(std::move(j));
    }
    return {{"check", name}, {"verdict", report.verdict()}, {"violations", std::move(violations)}};
}

void print_stick(std::ostream& out, const StickReport& report, const StateSpace& space) {
    out << "sticking at horizon " << report.stuck.horizon() << ": " << (report.verdict() ? "PASS" : "FAIL") << "\n";
    for (const auto& d : report.discrepancies) {
        out << "  path " << io::path_key(space, d.path) << ": stuck " << d.stuck << ", markov " << d.markov << "\n";
    }
    out << "coupling-time tail:\n";
    for (std::size_t i = 0; i < report.tail.size(); ++i) out << "  Pr(T>" << i << ") = " << report.tail[i] << "\n";
}

json stick_to_json(const StickReport& report, const StateSpace& space) {
    json discrepancies = json::array();
    for (const auto& d : report.discrepancies) {
        discrepancies.push_back({{"path", io::path_key(space, d.path)},
                                 {"stuck", io::rat_to_json(d.stuck)},
                                 {"markov", io::rat_to_json(d.markov)}});
    }
    return {{"verdict", report.verdict()},
            {"horizon", report.stuck.horizon()},
            {"discrepancies", std::move(discrepancies)},
            {"tail", io::rats_to_json(report.tail.entries)},
            {"stuck", io::path_dist_to_json(report.stuck)},
            {"markov", io::path_dist_to_json(report.markov)}};
}

void print_tv_rows(std::ostream& out, const std::vector<TvBoundRow>& rows) {
    out << "step\tPr(T>i)\ttv(muP^i,nuP^i)\tbound holds\n";
    for (const auto& r : rows) {
        out << r.step << "\t" << r.tail << "\t" << r.tv << "\t" << (r.holds ? "yes" : "no") << "\n";
    }
}

json tv_rows_to_json(const std::vector<TvBoundRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"step", r.step},
                       {"tail", io::rat_to_json(r.tail)},
                       {"tv", io::rat_to_json(r.tv)},
                       {"holds", r.holds}});
    }
    return out;
}

}  // namespace coupling::cli
