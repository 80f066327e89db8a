#pragma once

#include "config.hpp"

namespace wildstrat::cli {

json cmd_levi(const JobConfig& cfg, std::string* dot);
json cmd_parabolic(const JobConfig& cfg);
json cmd_classify(const JobConfig& cfg);
json cmd_character(const JobConfig& cfg);
json cmd_shapovalov(const JobConfig& cfg);
json cmd_simplicity(const JobConfig& cfg);
json cmd_quantize(const JobConfig& cfg);

}  // namespace wildstrat::cli
