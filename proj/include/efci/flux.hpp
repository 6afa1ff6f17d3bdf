#pragma once

#include <functional>
#include <map>
#include <string>

namespace efci {

/// Flux functional F together with its analytic derivative dF/du.
class FluxModel {
 public:
  using Fn = std::function<double(double)>;

  FluxModel(std::string name, Fn flux, Fn derivative,
            std::map<std::string, double> params = {})
      : name_(std::move(name)),
        flux_(std::move(flux)),
        derivative_(std::move(derivative)),
        params_(std::move(params)) {}

  const std::string& name() const { return name_; }
  double flux(double u) const { return flux_(u); }
  double derivative(double u) const { return derivative_(u); }
  const std::map<std::string, double>& params() const { return params_; }

  /// Advection speed a when this is the linear flux F(u) = a u.
  bool is_linear() const { return name_ == "linear"; }
  double speed() const { return params_.at("a"); }

 private:
  std::string name_;
  Fn flux_;
  Fn derivative_;
  std::map<std::string, double> params_;
};

/// F(u) = a u. Throws Error for a == 0.
FluxModel linear_flux(double a);

/// F(u) = u^2 / 2.
FluxModel burgers_flux();

/// Lookup by name ("linear" needs param "a"; "burgers" takes none).
FluxModel make_flux(const std::string& name,
                    const std::map<std::string, double>& params);

}  // namespace efci
