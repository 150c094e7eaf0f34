#include "coupling/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "coupling/errors.hpp"

namespace coupling::io {

using nlohmann::json;

namespace {

std::string inline_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += json(items[i]).dump();
    }
    return out + "]";
}

std::vector<std::string> rat_strings(std::span<const Rat> xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::string format_matrix(const StateSpace& space, const char* key, std::size_t rows,
                          const std::function<std::span<const Rat>(std::size_t)>& row) {
    std::string out = "{\n  \"states\": " + inline_array(space.labels()) + ",\n  \"" + key + "\": [\n";
    for (std::size_t r = 0; r < rows; ++r) {
        out += "    " + inline_array(rat_strings(row(r)));
        out += r + 1 < rows ? ",\n" : "\n";
    }
    return out + "  ]\n}\n";
}

std::string format_vector(const StateSpace& space, const char* key, std::span<const Rat> xs) {
    return "{\n  \"states\": " + inline_array(space.labels()) + ",\n  \"" + key + "\": " +
           inline_array(rat_strings(xs)) + "\n}\n";
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& member(const json& doc, const char* key) {
    if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

StateSpace parse_states(const json& doc) {
    const json& states = member(doc, "states");
    if (!states.is_array()) throw ParseError("'states' must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& s : states) {
        if (!s.is_string()) throw ParseError("'states' must be an array of strings");
        labels.push_back(s.get<std::string>());
    }
    return StateSpace(std::move(labels));
}

std::vector<Rat> parse_rat_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

std::vector<std::vector<Rat>> parse_rat_matrix(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of rows");
    std::vector<std::vector<Rat>> out;
    out.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) out.push_back(parse_rat_array(j[r], what + " row " + std::to_string(r)));
    return out;
}

}  // namespace

json rat_to_json(const Rat& x) { return x.to_string(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat::parse(j.dump());
    throw ParseError("expected a rational string like \"1/2\", got " + j.dump());
}

json rats_to_json(std::span<const Rat> xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(rat_to_json(x));
    return out;
}

std::string format_chain(const StochMatrix& P) {
    return format_matrix(P.space(), "P", P.size(), [&](std::size_t r) { return P.row(r); });
}

std::string format_kernel(const CouplingKernel& Q) {
    return format_matrix(Q.space(), "Q", Q.pair_count(), [&](std::size_t r) { return Q.row(r); });
}

std::string format_joint(const JointDist& theta) { return format_vector(theta.space(), "theta", theta.probs()); }

std::string format_dist(const Dist& mu) { return format_vector(mu.space(), "probs", mu.probs()); }

StochMatrix parse_chain(std::string_view text) {
    const json doc = parse_json(text);
    StateSpace space = parse_states(doc);
    return StochMatrix(std::move(space), parse_rat_matrix(member(doc, "P"), "P"));
}

CouplingKernel parse_kernel(std::string_view text) {
    const json doc = parse_json(text);
    StateSpace space = parse_states(doc);
    return CouplingKernel(std::move(space), parse_rat_matrix(member(doc, "Q"), "Q"));
}

JointDist parse_joint(std::string_view text) {
    const json doc = parse_json(text);
    StateSpace space = parse_states(doc);
    return JointDist(std::move(space), parse_rat_array(member(doc, "theta"), "theta"));
}

Dist parse_dist(std::string_view text) {
    const json doc = parse_json(text);
    StateSpace space = parse_states(doc);
    return Dist(std::move(space), parse_rat_array(member(doc, "probs"), "probs"));
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& file, std::string_view contents) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write '" + file.string() + "'");
    out << contents;
    if (!out) throw Error("failed writing '" + file.string() + "'");
}

StochMatrix load_chain(const std::filesystem::path& file) { return parse_chain(read_file(file)); }
CouplingKernel load_kernel(const std::filesystem::path& file) { return parse_kernel(read_file(file)); }
JointDist load_joint(const std::filesystem::path& file) { return parse_joint(read_file(file)); }

std::string path_key(const StateSpace& space, const Path& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += ',';
        out += space.label(path[i]);
    }
    return out;
}

Path parse_path_key(const StateSpace& space, std::string_view key) {
    Path out;
    std::size_t start = 0;
    while (true) {
        const auto comma = key.find(',', start);
        const auto label = key.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!space.contains(label)) throw ParseError("unknown state '" + std::string(label) + "' in path '" +
                                                     std::string(key) + "'");
        out.push_back(space.index(label));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

json path_dist_to_json(const PathDist& dist) {
    json out = json::object();
    for (const auto& [path, p] : dist.probs()) out[path_key(dist.space(), path)] = rat_to_json(p);
    return out;
}

PathDist path_dist_from_json(const StateSpace& space, const json& j) {
    if (!j.is_object() || j.empty()) throw ParseError("path distribution must be a non-empty JSON object");
    std::map<Path, Rat> probs;
    std::size_t length = 0;
    for (const auto& [key, value] : j.items()) {
        Path path = parse_path_key(space, key);
        if (length == 0) length = path.size();
        if (path.size() != length) throw ParseError("path keys of different lengths");
        probs[std::move(path)] += rat_from_json(value);
    }
    return PathDist(space, static_cast<unsigned>(length - 1), std::move(probs));
}

}  // namespace coupling::io
