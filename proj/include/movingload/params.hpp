#pragma once

namespace movingload {

/// Physical and kinematic inputs. Loads are H_j / mu0 (shear modulus
/// scale normalized to one).
struct MaterialConfig {
  double nu = 0.1;           // grading exponent, 0 < nu < 1
  double nu_p = 0.3;         // Poisson ratio, 0 <= nu_p < 0.5
  double speed_ratio = 0.2;  // V / c_s, subsonic: 0 < V/c_s < 1
  double h1 = -1.0;          // tangential load H1 / mu0
  double h2 = -1.0;          // normal load H2 / mu0
  double xi0 = 0.0;          // load abscissa in the moving frame

  /// Throws SubsonicViolation or ConfigError.
  void validate() const;
};

/// Closed-form quantities derived from a MaterialConfig, with mu0 = 1.
struct DerivedParams {
  double nu = 0.0;
  double nu_p = 0.0;
  double speed_ratio = 0.0;

  double lame_lambda = 0.0;   // lambda0 / mu0
  double p_modulus = 0.0;     // (lambda0 + 2 mu0) / mu0 = c_d^2 / c_s^2

  double a_d = 0.0;  // c_d / V
  double a_s = 0.0;  // c_s / V
  double a_d2 = 0.0;
  double a_s2 = 0.0;

  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta = 0.0;  // beta2 / beta1
  double eps = 0.0;   // ln(beta) / (2 pi)

  double lam1 = 0.0;  // amplitude of G1 as Im s -> +inf
  double lam2 = 0.0;  // amplitude of G2 as Im s -> +inf
  double r_param = 0.0;
  double l_param = 0.0;

  // Oscillation exponents of the unknowns near x = 0.
  double delta1_minus = 0.0;
  double delta2_minus = 0.0;
  double delta1_plus = 0.0;
  double delta2_plus = 0.0;

  double sigma = 0.0;  // contour abscissa, 0 < sigma < nu

  // Boundary-condition scale factors of the two traction components.
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

inline constexpr double default_sigma_fraction = 0.25;

/// Derives every closed-form parameter. sigma = sigma_fraction * nu.
///
/// Throws SubsonicViolation (speed_ratio >= 1), ConfigError (other
/// out-of-range inputs) or OscillationRegimeError (r < 1, which would make
/// the oscillation exponents complex).
DerivedParams derive_params(const MaterialConfig& cfg,
                            double sigma_fraction = default_sigma_fraction);

/// l = ln(r + sqrt(r^2 - 1)) / (2 pi); requires r >= 1.
double oscillation_half_width(double r);

}  // namespace movingload
