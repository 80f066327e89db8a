#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wildstrat/errors.hpp"

namespace fs = std::filesystem;
using namespace wildstrat;
using namespace wildstrat::cli;

namespace {

struct Overrides {
  std::string config, type, out, dot, csv, filtration, lambda, tuple, element;
  std::optional<int> depth, height, order, workers;
  std::optional<std::uint64_t> seed;
  bool gauge = false;
};

JobConfig build_config(const Overrides& o) {
  JobConfig cfg;
  if (!o.config.empty()) cfg = load_config(o.config);
  if (!o.type.empty()) cfg.type = o.type;
  if (o.depth) cfg.depth = *o.depth;
  if (o.height) cfg.height = *o.height;
  if (o.order) cfg.order = *o.order;
  if (o.workers) cfg.workers = *o.workers;
  if (o.seed) cfg.seed = *o.seed;
  if (!o.out.empty()) cfg.out = o.out;
  if (!o.dot.empty()) cfg.dot = o.dot;
  if (o.gauge) cfg.gauge = true;
  auto inline_json = [](const std::string& text, const char* what) {
    try {
      return json::parse(text);
    } catch (const json::parse_error&) {
      throw ValidationError(std::string("--") + what + " is not valid JSON");
    }
  };
  if (!o.filtration.empty()) cfg.filtration = inline_json(o.filtration, "filtration");
  if (!o.lambda.empty()) cfg.lambda = inline_json(o.lambda, "lambda");
  if (!o.tuple.empty()) cfg.tuple = inline_json(o.tuple, "tuple");
  if (!o.element.empty()) cfg.element = inline_json(o.element, "element");
  validate_bounds(cfg);
  return cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

std::optional<fs::path> cache_path(const std::string& command, const JobConfig& cfg) {
  const char* dir = std::getenv("WILDSTRAT_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::string key = command + "\n" + cfg.to_json().dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : key) h = (h ^ ch) * 1099511628211ULL;
  std::ostringstream name;
  name << command << '-' << std::hex << h << ".json";
  return fs::path(dir) / name.str();
}

std::string csv_table(const json& blocks) {
  std::string s = "weight,height,dim,rank,determinant\n";
  for (const auto& b : blocks) {
    std::string w;
    for (const auto& x : b["weight"]) w += (w.empty() ? "" : " ") + std::to_string(x.get<int>());
    s += "\"" + w + "\"," + std::to_string(b["height"].get<int>()) + "," + std::to_string(b["dim"].get<int>()) +
         "," + std::to_string(b["rank"].get<int>()) + "," + b["determinant"].get<std::string>() + "\n";
  }
  return s;
}

int run(const std::string& command, const Overrides& o) {
  JobConfig cfg = build_config(o);
  std::string text;
  std::string dot;
  auto cached = cache_path(command, cfg);
  bool hit = false;
  if (cached && fs::exists(*cached) && (command != "levi" || cfg.dot.empty())) {
    std::ifstream in(*cached, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    hit = true;
  }
  if (!hit) {
    json result;
    if (command == "levi") result = cmd_levi(cfg, cfg.dot.empty() ? nullptr : &dot);
    else if (command == "parabolic") result = cmd_parabolic(cfg);
    else if (command == "classify") result = cmd_classify(cfg);
    else if (command == "character") result = cmd_character(cfg);
    else if (command == "shapovalov") result = cmd_shapovalov(cfg);
    else if (command == "simplicity") result = cmd_simplicity(cfg);
    else result = cmd_quantize(cfg);
    text = result.dump(2) + "\n";
    if (cached) {
      fs::create_directories(cached->parent_path());
      write_file(cached->string(), text);
    }
  }
  if (!dot.empty()) write_file(cfg.dot, dot);
  if (command == "shapovalov" && !o.csv.empty()) write_file(o.csv, csv_table(json::parse(text)["blocks"]));
  if (cfg.out.empty()) std::cout << text;
  else write_file(cfg.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for wild orbits over truncated current Lie algebras"};
  app.require_subcommand(1);
  Overrides o;
  std::string chosen;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON job configuration");
    sub->add_option("--type", o.type, "root datum, e.g. sl2, gl3, B2");
    sub->add_option("--depth", o.depth, "number of eps-degrees r");
    sub->add_option("--height", o.height, "height bound K");
    sub->add_option("--order", o.order, "hbar order N");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--workers", o.workers, "worker threads");
    sub->add_option("--filtration", o.filtration, "filtration as JSON");
    sub->add_option("--lambda", o.lambda, "formal type as JSON");
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };

  auto* levi = app.add_subcommand("levi", "Levi poset and filtration counts");
  common(levi);
  levi->add_option("--dot", o.dot, "write the Hasse diagram as DOT");
  auto* parabolic = app.add_subcommand("parabolic", "parabolic subsets and filtrations");
  common(parabolic);
  auto* classify = app.add_subcommand("classify", "stratum, normal form and centraliser of an element");
  common(classify);
  classify->add_option("--tuple", o.tuple, "Cartan tuple as JSON, last entry leads");
  classify->add_option("--element", o.element, "g coordinates per eps-degree as JSON");
  classify->add_flag("--gauge", o.gauge, "also classify a random gauge transform");
  auto* character = app.add_subcommand("character", "admissibility and nonsingularity of a formal type");
  common(character);
  auto* shapovalov = app.add_subcommand("shapovalov", "Shapovalov blocks up to height K");
  common(shapovalov);
  shapovalov->add_option("--csv", o.csv, "write the determinant table as CSV");
  auto* simplicity = app.add_subcommand("simplicity", "simplicity probe and truncated quotients");
  common(simplicity);
  auto* quantize = app.add_subcommand("quantize", "inverse Shapovalov series and associativity");
  common(quantize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(chosen, o);
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violation: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
