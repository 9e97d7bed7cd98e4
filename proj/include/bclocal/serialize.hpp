#pragma once

// report assembly for the command surface, one json builder per command
// plus uniform rendering into json, csv, or markdown

#include <json.hpp>
#include <string>

#include "bclocal/level.hpp"

namespace bclocal {

struct RunConfig {
  std::string field = "Q2";  // local field descriptor
  std::string levels = "1:1";
  std::string beta = "1";
  long long N = 16;           // matrix truncation
  long long B = 100000;       // global coefficient cutoff
  std::string global_field = "Q";
  long long p = 2;            // prime for the induced mass
  std::string format = "json";
  std::string out;            // empty writes to stdout
  Guardrails guards;
};

nlohmann::json levels_report(const RunConfig& cfg);
nlohmann::json kms_report(const RunConfig& cfg);
nlohmann::json ktheory_report(const RunConfig& cfg);
nlohmann::json prim_space_report(const RunConfig& cfg);
nlohmann::json induce_report(const RunConfig& cfg);
nlohmann::json all_report(const RunConfig& cfg);

// json pretty dump, or the columns/rows block as csv or a markdown table
std::string render_report(const nlohmann::json& rep, const std::string& format);

} // namespace bclocal
