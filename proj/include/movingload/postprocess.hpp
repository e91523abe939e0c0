#pragma once

#include <array>
#include <optional>

#include "movingload/params.hpp"
#include "movingload/sie_system.hpp"
#include "movingload/special_functions.hpp"

namespace movingload {

/// Phi_{j, sign}^{(m)} evaluated at s = nu - 1.
struct BoundaryPhi {
  std::array<std::array<std::array<cplx, 2>, 2>, 2> value{};  // [j][m][sign]

  cplx& at(Component j, Component m, SystemSign s) {
    return value[index_of(j)][index_of(m)][index_of(s)];
  }
  const cplx& at(Component j, Component m, SystemSign s) const {
    return value[index_of(j)][index_of(m)][index_of(s)];
  }
};

struct Determinants {
  cplx plus;
  cplx minus;

  const cplx& at(SystemSign s) const { return s == SystemSign::plus ? plus : minus; }
};

/// Load constants C_{j, sign}.
struct LoadConstants {
  cplx c1_plus, c1_minus, c2_plus, c2_minus;

  const cplx& at(Component j, SystemSign s) const;
};

struct BoundaryConstants {
  BoundaryPhi phi;
  Determinants delta;
  LoadConstants c;
};

/// Quadrature of the boundary integral through the collocation solution.
BoundaryPhi boundary_phi(const SIESolution& sol);

/// Delta_sign = Phi_1^(1) Phi_2^(2) - Phi_1^(2) Phi_2^(1). Throws
/// DegenerateDeterminant if either |Delta| < 1e-8.
Determinants determinant_delta(const BoundaryPhi& phi);

/// Linear in (h1, h2). Throws DegenerateDeterminant like determinant_delta.
LoadConstants constants_c(const BoundaryPhi& phi, const Determinants& delta,
                          const MaterialConfig& cfg, const DerivedParams& p);

BoundaryConstants boundary_constants(const SIESolution& sol, const MaterialConfig& cfg);

/// Expansion coefficients for one side of the load, kappa = sgn(xi0 - xi).
/// d: small-eta displacement series; e: large-eta derivative series.
struct FieldCoefficients {
  int kappa = 1;
  double nu = 0.0;
  std::array<cplx, 2> d0{}, d1{}, d2{};
  std::array<cplx, 2> e0{}, e1{};
};

FieldCoefficients field_coeffs(const BoundaryConstants& c, const DerivedParams& p, int kappa);

/// Small-eta displacements u_j = |xi - xi0|^{-nu} (d_j0 + d_j2 eta^2).
/// Throws SingularPointError at the load point, ExpansionRangeError for eta > eta_max.
std::array<cplx, 2> displacement_field(const FieldCoefficients& c, double xi, double xi0,
                                       double y, double eta_max = 1.0);

/// Tangential derivative of the small-eta displacement expansion.
std::array<cplx, 2> derivative_small_eta(const FieldCoefficients& c, double xi, double xi0,
                                         double y, double eta_max = 1.0);

/// {sigma_12 / mu0, sigma_22 / mu0} from the small-eta expansion; zero at y = 0.
std::array<cplx, 2> stress_field(const FieldCoefficients& c, double xi, double xi0, double y,
                                 const DerivedParams& p, double eta_max = 1.0);

/// du_j/dxi = (e_j0 + e_j1 eta^{nu-1}) / (pi (xi - xi0) y^nu); remainder dropped.
/// Throws ExpansionRangeError for eta < eta_min.
std::array<cplx, 2> derivative_large_eta(const FieldCoefficients& c, double xi, double xi0,
                                         double y, double eta_min = 2.0);

enum class Expansion { small_eta, large_eta, out_of_range };

const char* to_string(Expansion e);

/// Real part of a field value plus |Im| / |value| before projection.
struct FieldValue {
  double value = 0.0;
  double imag_residue = 0.0;
};

struct FieldResult {
  double xi = 0.0;
  double y = 0.0;
  double eta = 0.0;
  Expansion expansion_used = Expansion::out_of_range;
  std::optional<FieldValue> u1, u2, du1_dxi, du2_dxi, s12, s22;

  double max_imag_residue() const;
};

struct FieldOptions {
  double eta_max = 1.0;
  double eta_min = 2.0;
  /// Hard gate on the imaginary residue of any reported value.
  double realness_tolerance = 1e-2;
};

/// Evaluates every field available at (xi, y): all of them for
/// eta <= eta_max, only the derivatives for eta >= eta_min, none in between.
/// Throws SingularPointError at the load point and RealnessViolation when a
/// residue exceeds options.realness_tolerance.
FieldResult evaluate_field(const BoundaryConstants& c, const DerivedParams& p,
                           const MaterialConfig& cfg, double xi, double y,
                           const FieldOptions& options = {});

}  // namespace movingload
