#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "coupling/checks.hpp"
#include "coupling/sticking.hpp"

namespace coupling::cli {

std::string format_vector(std::span<const Rat> xs);
std::string pair_label(const StateSpace& space, StatePair p);

void print_check(std::ostream& out, const std::string& name, const CheckReport& report, const StateSpace& space);
nlohmann::json check_to_json(const std::string& name, const CheckReport& report, const StateSpace& space);

void print_stick(std::ostream& out, const StickReport& report, const StateSpace& space);
nlohmann::json stick_to_json(const StickReport& report, const StateSpace& space);

void print_tv_rows(std::ostream& out, const std::vector<TvBoundRow>& rows);
nlohmann::json tv_rows_to_json(const std::vector<TvBoundRow>& rows);

}  // namespace coupling::cli
