#pragma once

#include <iosfwd>

#include "pcm/report.hpp"
#include "pcm/ticketlock.hpp"

#include <json.hpp>

namespace pcm {

void print_report(std::ostream& out, const LawReport& report);
void print_exploration(std::ostream& out, const ExplorationResult& result);

nlohmann::json report_to_json(const LawReport& report);
nlohmann::json exploration_to_json(const ExplorationResult& result);

std::string config_to_string(const GlobalConfig& config);

}  // namespace pcm
