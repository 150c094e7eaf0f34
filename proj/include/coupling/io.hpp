#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "coupling/kernel.hpp"
#include "coupling/stochastic.hpp"
#include "coupling/sticking.hpp"

namespace coupling::io {

// On-disk formats. Every rational is a JSON string "p/q" or "k"; JSON integer
// literals are also accepted on input, floats never are.
//
//   chain:  {"states": [labels], "P": [[n entries] x n]}
//   kernel: {"states": [labels], "Q": [[n^2 entries] x n^2]}   pair_index order
//   joint:  {"states": [labels], "theta": [n^2 entries]}       pair_index order
//   dist:   {"states": [labels], "probs": [n entries]}
//
// format_* emits the canonical text: two-space indent, one matrix row per
// line, trailing newline. parse_*(format_*(x)) == x, and format_* of a parsed
// canonical file reproduces it byte for byte.

std::string format_chain(const StochMatrix& P);
std::string format_kernel(const CouplingKernel& Q);
std::string format_joint(const JointDist& theta);
std::string format_dist(const Dist& mu);

/// Throw ParseError on malformed JSON or shape; validation errors
/// (NegativeEntry, SumNotOne, ...) pass through.
StochMatrix parse_chain(std::string_view text);
CouplingKernel parse_kernel(std::string_view text);
JointDist parse_joint(std::string_view text);
Dist parse_dist(std::string_view text);

StochMatrix load_chain(const std::filesystem::path& file);
CouplingKernel load_kernel(const std::filesystem::path& file);
JointDist load_joint(const std::filesystem::path& file);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, std::string_view contents);

nlohmann::json rat_to_json(const Rat& x);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rats_to_json(std::span<const Rat> xs);

/// "z0,z1,...,zh" using state labels.
std::string path_key(const StateSpace& space, const Path& path);
Path parse_path_key(const StateSpace& space, std::string_view key);

/// JSON object mapping path_key -> rational string.
nlohmann::json path_dist_to_json(const PathDist& dist);
/// Horizon is taken from the key length; all keys must agree.
PathDist path_dist_from_json(const StateSpace& space, const nlohmann::json& j);

}  // namespace coupling::io
