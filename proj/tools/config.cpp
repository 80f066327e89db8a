#include "config.hpp"

#include <fstream>
#include <set>

#include "wildstrat/errors.hpp"
#include "wildstrat/orbit.hpp"

namespace wildstrat::cli {

json JobConfig::to_json() const {
  json j;
  j["type"] = type;
  j["depth"] = depth;
  j["height"] = height;
  j["order"] = order;
  j["seed"] = seed;
  j["gauge"] = gauge;
  j["filtration"] = filtration;
  j["lambda"] = lambda;
  j["tuple"] = tuple;
  j["element"] = element;
  return j;
}

void apply_json(JobConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  static const std::set<std::string> known{"type",    "depth",      "height", "order", "seed",  "workers", "out",
                                           "dot",     "gauge",      "filtration", "lambda", "tuple", "element"};
  for (const auto& [k, v] : doc.items())
    if (!known.count(k)) throw ValidationError("unknown config key '" + k + "'");
  auto get_int = [&](const char* key, auto& dst) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer()) throw ValidationError(std::string("config key '") + key + "' must be an integer");
    dst = doc[key].get<std::remove_reference_t<decltype(dst)>>();
  };
  if (doc.contains("type")) cfg.type = doc["type"].get<std::string>();
  get_int("depth", cfg.depth);
  get_int("height", cfg.height);
  get_int("order", cfg.order);
  get_int("seed", cfg.seed);
  get_int("workers", cfg.workers);
  if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
  if (doc.contains("dot")) cfg.dot = doc["dot"].get<std::string>();
  if (doc.contains("gauge")) cfg.gauge = doc["gauge"].get<bool>();
  if (doc.contains("filtration")) cfg.filtration = doc["filtration"];
  if (doc.contains("lambda")) cfg.lambda = doc["lambda"];
  if (doc.contains("tuple")) cfg.tuple = doc["tuple"];
  if (doc.contains("element")) cfg.element = doc["element"];
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
  JobConfig cfg;
  apply_json(cfg, doc);
  return cfg;
}

void validate_bounds(const JobConfig& cfg) {
  if (cfg.depth < 1) throw ValidationError("depth must be positive");
  if (cfg.height < 0) throw ValidationError("height must be nonnegative");
  if (cfg.order < 0) throw ValidationError("order must be nonnegative");
  if (cfg.workers < 1) throw ValidationError("workers must be positive");
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ValidationError("rationals must be integers or \"p/q\" strings, got " + v.dump());
}

Vec vec_from_json(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n)
    throw ValidationError(what + " must be an array of " + std::to_string(n) + " rationals");
  Vec out;
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

parab::ParabolicFiltration resolve_filtration(const liecore::RootDatum& rd, const JobConfig& cfg) {
  int r = cfg.depth;
  parab::ParabolicFiltration f;
  const json& spec = cfg.filtration;
  auto full = strat::RootSubset::full(rd.num_roots());
  if (spec.is_null() || (spec.is_string() && spec.get<std::string>() == "borel")) {
    f = parab::constant_filtration(parab::positive_borel(rd), r);
  } else if (spec.is_object() && spec.contains("chain")) {
    int k = spec["chain"].get<int>();
    for (int i = 0; i < r; ++i) f.psi.push_back(i < k ? parab::positive_borel(rd) : full);
  } else if (spec.is_object() && spec.contains("standard")) {
    for (const auto& m : spec["standard"]) f.psi.push_back(parab::standard_parabolic(rd, m.get<unsigned>()));
  } else if (spec.is_array()) {
    for (const auto& layer : spec) {
      std::vector<int> idx;
      for (const auto& a : layer) {
        int i = a.get<int>();
        if (i < 0 || i >= rd.num_roots()) throw ValidationError("root index out of range: " + std::to_string(i));
        idx.push_back(i);
      }
      f.psi.push_back(strat::RootSubset::from_indices(rd.num_roots(), idx));
    }
  } else {
    throw ValidationError("unrecognised filtration spec " + spec.dump());
  }
  if (f.depth() != r)
    throw ValidationError("filtration has depth " + std::to_string(f.depth()) + " but depth is " + std::to_string(r));
  if (!parab::is_parabolic_filtration(rd, f)) throw ValidationError("not a parabolic filtration");
  return f;
}

parab::FormalType resolve_lambda(const liecore::RootDatum& rd, const JobConfig& cfg) {
  if (!cfg.lambda.is_array() || static_cast<int>(cfg.lambda.size()) != cfg.depth)
    throw ValidationError("lambda must list one covector per eps-degree (" + std::to_string(cfg.depth) + ")");
  parab::FormalType lam;
  for (std::size_t i = 0; i < cfg.lambda.size(); ++i)
    lam.push_back(vec_from_json(cfg.lambda[i], rd.dim_t(), "lambda[" + std::to_string(i) + "]"));
  return lam;
}

liecore::TcElement resolve_element(const liecore::RootDatum& rd, const JobConfig& cfg) {
  int r = cfg.depth;
  if (!cfg.tuple.is_null()) {
    if (!cfg.tuple.is_array() || static_cast<int>(cfg.tuple.size()) != r)
      throw ValidationError("tuple must have one Cartan vector per eps-degree");
    strat::Tuple t;
    for (std::size_t i = 0; i < cfg.tuple.size(); ++i)
      t.push_back(vec_from_json(cfg.tuple[i], rd.dim_t(), "tuple[" + std::to_string(i) + "]"));
    return orbit::from_marking_tuple(rd, t);
  }
  if (!cfg.element.is_array() || static_cast<int>(cfg.element.size()) != r)
    throw ValidationError("classify needs 'tuple' or 'element' with one entry per eps-degree");
  Vec flat;
  for (std::size_t i = 0; i < cfg.element.size(); ++i) {
    Vec c = vec_from_json(cfg.element[i], rd.dim_g(), "element[" + std::to_string(i) + "]");
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return liecore::tc_from_flat(rd, r, flat);
}

}  // namespace wildstrat::cli
