#include "movingload/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "movingload/errors.hpp"

namespace movingload {

namespace {

std::string describe(const char* name, double value) {
  std::ostringstream os;
  os.precision(17);
  os << name << "=" << value;
  return os.str();
}

}  // namespace

void MaterialConfig::validate() const {
  if (!std::isfinite(speed_ratio) || speed_ratio <= 0.0)
    throw ConfigError(describe("speed_ratio", speed_ratio) + " must be positive");
  if (speed_ratio >= 1.0)
    throw SubsonicViolation(describe("speed_ratio", speed_ratio) +
                            " is not below the shear wave speed");
  if (!std::isfinite(nu) || nu <= 0.0 || nu >= 1.0)
    throw ConfigError(describe("nu", nu) + " must lie in (0, 1)");
  if (!std::isfinite(nu_p) || nu_p < 0.0 || nu_p >= 0.5)
    throw ConfigError(describe("nu_p", nu_p) + " must lie in [0, 0.5)");
  if (!std::isfinite(h1) || !std::isfinite(h2) || !std::isfinite(xi0))
    throw ConfigError("load components and xi0 must be finite");
}

double oscillation_half_width(double r) {
  if (!(r >= 1.0))
    throw OscillationRegimeError(describe("r", r) +
                                 " < 1: oscillation exponents would be complex");
  return std::log(r + std::sqrt(r * r - 1.0)) / (2.0 * std::numbers::pi);
}

DerivedParams derive_params(const MaterialConfig& cfg, double sigma_fraction) {
  cfg.validate();
  if (!std::isfinite(sigma_fraction) || sigma_fraction <= 0.0 || sigma_fraction >= 1.0)
    throw ConfigError(describe("sigma_fraction", sigma_fraction) + " must lie in (0, 1)");

  constexpr double pi = std::numbers::pi;
  DerivedParams p;
  p.nu = cfg.nu;
  p.nu_p = cfg.nu_p;
  p.speed_ratio = cfg.speed_ratio;

  p.p_modulus = 2.0 * (1.0 - cfg.nu_p) / (1.0 - 2.0 * cfg.nu_p);
  p.lame_lambda = p.p_modulus - 2.0;

  p.a_s = 1.0 / cfg.speed_ratio;
  p.a_d = p.a_s * std::sqrt(p.p_modulus);
  p.a_s2 = p.a_s * p.a_s;
  p.a_d2 = p.a_s2 * p.p_modulus;

  p.beta1 = p.a_s2 / (p.a_d2 - 1.0);
  p.beta2 = p.a_d2 / (p.a_s2 - 1.0);
  if (!(p.beta1 > 0.0 && p.beta2 > 0.0))
    throw SubsonicViolation(describe("speed_ratio", cfg.speed_ratio) +
                            " gives non-positive beta parameters");
  p.beta = p.beta2 / p.beta1;
  p.eps = std::log(p.beta) / (2.0 * pi);

  const double contrast = p.a_d2 - p.a_s2;
  p.lam1 = contrast / ((p.a_d2 - 1.0) * std::sqrt(p.beta2));
  p.lam2 = contrast / ((p.a_s2 - 1.0) * std::sqrt(p.beta1));

  // cosh(pi eps) = (sqrt(beta) + 1/sqrt(beta)) / 2; r - 1 can be ~1e-4.
  const double sqrt_beta = std::sqrt(p.beta);
  p.r_param = 0.5 * (sqrt_beta + 1.0 / sqrt_beta) - 0.5 * p.lam1 * p.lam2;
  p.l_param = oscillation_half_width(p.r_param);

  p.delta1_minus = 0.5 * p.eps + p.l_param;
  p.delta2_plus = p.delta1_minus;
  p.delta1_plus = -0.5 * p.eps + p.l_param;
  p.delta2_minus = p.delta1_plus;

  p.sigma = sigma_fraction * cfg.nu;

  const double g = std::tgamma(0.5 * (1.0 - cfg.nu));
  const double scale = std::pow(2.0, cfg.nu + 1.0);
  p.gamma1 = g / (scale * std::pow(p.beta1, 0.5 * (cfg.nu - 1.0)));
  p.gamma2 = g / (p.p_modulus * scale * std::pow(p.beta2, 0.5 * (cfg.nu - 1.0)));
  return p;
}

}  // namespace movingload
