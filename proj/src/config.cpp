#include <cmath>
#include <fstream>
#include <sstream>

#include "efci/harness.hpp"

namespace efci {

using nlohmann::json;

std::function<double(double)> InitialCondition::function(double a,
                                                         double b) const {
  switch (kind) {
    case Kind::kConstant:
      return [c = c0](double) { return c; };
    case Kind::kAffine:
      return [c0 = c0, c1 = c1](double x) { return c0 + c1 * x; };
    case Kind::kSine:
      return [amp = amplitude, f = freq, off = offset](double x) {
        return amp * std::sin(f * x) + off;
      };
    case Kind::kTable:
      return [t = table, a, b](double x) {
        const double span = (b - a) / (t.size() - 1);
        const double pos = std::clamp((x - a) / span, 0.0,
                                      static_cast<double>(t.size() - 1));
        const auto i = std::min(static_cast<std::size_t>(pos), t.size() - 2);
        const double frac = pos - i;
        return t[i] + frac * (t[i + 1] - t[i]);
      };
  }
  return {};
}

namespace {

// Reads doc[key] (dotted path for messages) with a field-named error.
template <typename T>
T get(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw Error("config field '" + path + "' is missing");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error("config field '" + path + "': " + e.what());
  }
}

template <typename T>
T get_or(const json& obj, const std::string& key, const std::string& path,
         T fallback) {
  return obj.contains(key) ? get<T>(obj, key, path) : fallback;
}

InitialCondition parse_u0(const json& node) {
  InitialCondition u0;
  const auto kind = get<std::string>(node, "kind", "u0.kind");
  if (kind == "constant") {
    u0.kind = InitialCondition::Kind::kConstant;
    u0.c0 = get<double>(node, "value", "u0.value");
  } else if (kind == "affine") {
    u0.kind = InitialCondition::Kind::kAffine;
    u0.c0 = get<double>(node, "c0", "u0.c0");
    u0.c1 = get<double>(node, "c1", "u0.c1");
  } else if (kind == "sine") {
    u0.kind = InitialCondition::Kind::kSine;
    u0.amplitude = get<double>(node, "amplitude", "u0.amplitude");
    u0.freq = get<double>(node, "freq", "u0.freq");
    u0.offset = get_or<double>(node, "offset", "u0.offset", 0.0);
  } else if (kind == "table") {
    u0.kind = InitialCondition::Kind::kTable;
    u0.table = get<std::vector<double>>(node, "values", "u0.values");
    if (u0.table.size() < 2)
      throw Error("config field 'u0.values': need at least two samples");
  } else {
    throw Error("config field 'u0.kind': unknown kind '" + kind + "'");
  }
  return u0;
}

void parse_checks(const json& node, CheckSelection& sel) {
  const std::pair<const char*, bool*> fields[] = {
      {"theorem1", &sel.theorem1},     {"corollary1", &sel.corollary1},
      {"corollary2", &sel.corollary2}, {"prop4", &sel.prop4},
      {"prop5", &sel.prop5},           {"prop6", &sel.prop6},
      {"prop7_8", &sel.prop7_8},       {"prop9_10", &sel.prop9_10},
      {"corollary4", &sel.corollary4}, {"corollary5", &sel.corollary5},
      {"limit_case", &sel.limit_case}};
  for (const auto& [key, _] : node.items()) {
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (key == name) {
        *slot = get<bool>(node, key, "checks." + key);
        known = true;
      }
    }
    if (!known) throw Error("config field 'checks." + key + "': unknown check family");
  }
}

// Re-runs the constructors so that invalid values fail at load time.
void validate(const ExperimentConfig& cfg) {
  auto field = [](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(std::string("config field '") + name + "': " + e.what());
    }
  };
  field("h", [&] { make_grid(cfg.a, cfg.b, cfg.h); });
  field("r", [&] { refine(make_grid(cfg.a, cfg.b, cfg.h), cfg.r); });
  field("flux", [&] { make_flux(cfg.flux_name, cfg.flux_params); });
  if (cfg.N < 1) throw Error("config field 'N': need N >= 1");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
    throw Error("config field 'dt': must be positive");
  if (cfg.eps && !(*cfg.eps >= 0.0))
    throw Error("config field 'eps': must be >= 0");
  if (cfg.boundary) {
    const auto f = cfg.u0.function(cfg.a, cfg.b);
    if (std::abs(f(cfg.a) - cfg.boundary->left) > 1e-9 ||
        std::abs(f(cfg.b) - cfg.boundary->right) > 1e-9)
      throw Error("config field 'boundary': values disagree with u0 at the "
                  "endpoints by more than 1e-9");
  }
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw Error("config: top level must be an object");
  ExperimentConfig cfg;

  const json& domain = doc.contains("domain") ? doc.at("domain") : json::object();
  cfg.a = get_or<double>(domain, "a", "domain.a", 0.0);
  cfg.b = get_or<double>(domain, "b", "domain.b", 1.0);

  if (!doc.contains("flux")) throw Error("config field 'flux' is missing");
  const json& flux = doc.at("flux");
  cfg.flux_name = get<std::string>(flux, "name", "flux.name");
  for (const auto& [key, value] : flux.items()) {
    if (key == "name") continue;
    cfg.flux_params[key] = get<double>(flux, key, "flux." + key);
  }

  if (!doc.contains("u0")) throw Error("config field 'u0' is missing");
  cfg.u0 = parse_u0(doc.at("u0"));

  cfg.h = get<double>(doc, "h", "h");
  cfg.dt = get<double>(doc, "dt", "dt");
  cfg.N = get<int>(doc, "N", "N");
  cfg.r = get<int>(doc, "r", "r");

  if (doc.contains("boundary")) {
    const json& bc = doc.at("boundary");
    if (bc.is_string()) {
      if (bc.get<std::string>() != "from_u0")
        throw Error("config field 'boundary': expected \"from_u0\" or {u_a, u_b}");
    } else {
      cfg.boundary = Boundary{get<double>(bc, "u_a", "boundary.u_a"),
                              get<double>(bc, "u_b", "boundary.u_b")};
    }
  }
  if (doc.contains("eps") && !doc.at("eps").is_null())
    cfg.eps = get<double>(doc, "eps", "eps");

  if (doc.contains("outputs")) {
    const json& out = doc.at("outputs");
    cfg.csv_name = get_or<std::string>(out, "csv", "outputs.csv", cfg.csv_name);
    cfg.summary_name =
        get_or<std::string>(out, "summary", "outputs.summary", cfg.summary_name);
  }
  if (doc.contains("checks")) parse_checks(doc.at("checks"), cfg.checks);

  validate(cfg);
  return cfg;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open '" + path.string() + "'");
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw Error("config: '" + path.string() + "' is not valid JSON: " + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_json(path));
}

void set_dotted(json& doc, const std::string& key, const std::string& text) {
  json* node = &doc;
  std::stringstream parts(key);
  std::string part;
  std::vector<std::string> path;
  while (std::getline(parts, part, '.')) path.push_back(part);
  if (path.empty()) throw Error("sweep: empty parameter name");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) node = &(*node)[path[i]];

  json value;
  try {
    std::size_t used = 0;
    const double number = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    const bool integral = text.find_first_of(".eE") == std::string::npos;
    value = integral ? json(static_cast<long long>(number)) : json(number);
  } catch (const std::exception&) {
    value = text;
  }
  (*node)[path.back()] = value;
}

}  // namespace efci
