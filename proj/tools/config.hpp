#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "wildstrat/lie.hpp"
#include "wildstrat/parab.hpp"

namespace wildstrat::cli {

using nlohmann::json;

struct JobConfig {
  std::string type = "sl2";
  int depth = 1;
  int height = 4;  // K
  int order = 2;   // N
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
  std::string dot;
  bool gauge = false;
  json filtration;  // "borel", {"chain": k}, {"standard": [masks]} or [[root indices], ...]
  json lambda;      // [[ "p/q", ... ], ...], one covector per eps-degree
  json tuple;       // Cartan tuple in stratification order (last entry leads)
  json element;     // [[g coordinates], ...] per eps-degree

  json to_json() const;
};

// Reads a single JSON document; unknown keys are rejected.
JobConfig load_config(const std::string& path);
void apply_json(JobConfig& cfg, const json& doc);
void validate_bounds(const JobConfig& cfg);

Rational rational_from_json(const json& v);
Vec vec_from_json(const json& v, std::size_t n, const std::string& what);

parab::ParabolicFiltration resolve_filtration(const liecore::RootDatum& rd, const JobConfig& cfg);
parab::FormalType resolve_lambda(const liecore::RootDatum& rd, const JobConfig& cfg);
liecore::TcElement resolve_element(const liecore::RootDatum& rd, const JobConfig& cfg);

}  // namespace wildstrat::cli
