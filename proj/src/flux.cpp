#include "efci/flux.hpp"

#include <cmath>

#include "efci/types.hpp"

namespace efci {

FluxModel linear_flux(double a) {
  if (a == 0.0 || !std::isfinite(a))
    throw Error("linear flux: speed a must be finite and nonzero");
  return FluxModel(
      "linear", [a](double u) { return a * u; }, [a](double) { return a; },
      {{"a", a}});
}

FluxModel burgers_flux() {
  return FluxModel(
      "burgers", [](double u) { return 0.5 * u * u; },
      [](double u) { return u; });
}

FluxModel make_flux(const std::string& name,
                    const std::map<std::string, double>& params) {
  if (name == "linear") {
    auto it = params.find("a");
    if (it == params.end()) throw Error("flux.a: linear flux needs speed 'a'");
    return linear_flux(it->second);
  }
  if (name == "burgers") return burgers_flux();
  throw Error("flux.name: unknown flux '" + name + "'");
}

}  // namespace efci
