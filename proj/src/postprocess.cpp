#include "movingload/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "movingload/errors.hpp"

namespace movingload {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double degenerate_delta = 1e-8;

double kronecker(Component a, Component b) { return a == b ? 1.0 : 0.0; }

cplx phase(double angle) { return std::polar(1.0, angle); }

// sum_m C_{m, sign} Phi_{j, sign}^{(m)}
cplx loaded_phi(const BoundaryConstants& c, Component j, SystemSign s) {
  return c.c.at(Component::first, s) * c.phi.at(j, Component::first, s) +
         c.c.at(Component::second, s) * c.phi.at(j, Component::second, s);
}

double check_distance(double xi, double xi0, double y) {
  if (!std::isfinite(xi) || !std::isfinite(y) || y < 0.0)
    throw DomainError("field point must be finite with y >= 0");
  const double rho = std::abs(xi - xi0);
  if (rho == 0.0) {
    if (y == 0.0) throw SingularPointError("field requested at the load point");
    throw ExpansionRangeError("field requested directly below the load (eta infinite)");
  }
  return rho;
}

std::string range_message(const char* which, double eta, double limit) {
  std::ostringstream os;
  os << which << " expansion requested at eta=" << eta << " (limit " << limit << ")";
  return os.str();
}

double small_eta(double xi, double xi0, double y, double eta_max) {
  const double eta = y / check_distance(xi, xi0, y);
  if (eta > eta_max) throw ExpansionRangeError(range_message("small-eta", eta, eta_max));
  return eta;
}

FieldValue project(cplx z) {
  const double mag = std::abs(z);
  return {z.real() + 0.0, mag > 0.0 ? std::abs(z.imag()) / mag : 0.0};
}

}  // namespace

const cplx& LoadConstants::at(Component j, SystemSign s) const {
  if (j == Component::first) return s == SystemSign::plus ? c1_plus : c1_minus;
  return s == SystemSign::plus ? c2_plus : c2_minus;
}

BoundaryPhi boundary_phi(const SIESolution& sol) {
  const Discretization& d = sol.grid;
  const DerivedParams& p = sol.params;
  const cplx shift = phase(0.5 * pi * (p.sigma - p.nu));
  const double head = 1.0 / std::cos(0.5 * pi * p.nu);

  BoundaryPhi phi;
  for (Component j : {Component::first, Component::second}) {
    const Component q = other(j);
    const auto w_plus = panel_weights(d, exponent(p, q, Branch::plus));
    const auto w_minus = panel_weights(d, exponent(p, q, Branch::minus));
    for (SystemSign s : {SystemSign::plus, SystemSign::minus}) {
      for (Component m : {Component::first, Component::second}) {
        const UnknownBlocks& f = sol.at(s, m);
        const auto& f_plus = f.get(q, Branch::plus);
        const auto& f_minus = f.get(q, Branch::minus);
        cplx sum = 0.0;
        for (std::size_t n = 1; n <= d.n; ++n) {
          const double xn = d.nodes[n];
          sum += f_plus(n - 1) * w_plus[n - 1] / (xn * std::conj(shift) + shift);
          sum += f_minus(n - 1) * w_minus[n - 1] / (xn * shift + std::conj(shift));
        }
        phi.at(j, m, s) =
            sign_value(s) * cplx(0.0, 1.0 / (2.0 * pi)) * sum - kronecker(j, m) * head;
      }
    }
  }
  return phi;
}

Determinants determinant_delta(const BoundaryPhi& phi) {
  using C = Component;
  Determinants out;
  for (SystemSign s : {SystemSign::plus, SystemSign::minus}) {
    const cplx det = phi.at(C::first, C::first, s) * phi.at(C::second, C::second, s) -
                     phi.at(C::first, C::second, s) * phi.at(C::second, C::first, s);
    if (!(std::abs(det) >= degenerate_delta)) {
      std::ostringstream os;
      os << "|Delta" << (s == SystemSign::plus ? "+" : "-") << "| = " << std::abs(det)
         << " below " << degenerate_delta;
      throw DegenerateDeterminant(os.str());
    }
    (s == SystemSign::plus ? out.plus : out.minus) = det;
  }
  return out;
}

LoadConstants constants_c(const BoundaryPhi& phi, const Determinants& delta,
                          const MaterialConfig& cfg, const DerivedParams& p) {
  using C = Component;
  const double load1 = cfg.h1 * p.gamma1;
  const double load2 = cfg.h2 * p.gamma2;
  LoadConstants out;
  for (SystemSign s : {SystemSign::plus, SystemSign::minus}) {
    const cplx det = delta.at(s);
    if (!(std::abs(det) >= degenerate_delta))
      throw DegenerateDeterminant("constants_c: determinant below degeneracy gate");
    const cplx c1 =
        (load1 * phi.at(C::second, C::second, s) - load2 * phi.at(C::first, C::second, s)) / det;
    const cplx c2 =
        (load2 * phi.at(C::first, C::first, s) - load1 * phi.at(C::second, C::first, s)) / det;
    if (s == SystemSign::plus) {
      out.c1_plus = c1;
      out.c2_plus = c2;
    } else {
      out.c1_minus = c1;
      out.c2_minus = c2;
    }
  }
  return out;
}

BoundaryConstants boundary_constants(const SIESolution& sol, const MaterialConfig& cfg) {
  BoundaryConstants c;
  c.phi = boundary_phi(sol);
  c.delta = determinant_delta(c.phi);
  c.c = constants_c(c.phi, c.delta, cfg, sol.params);
  return c;
}

FieldCoefficients field_coeffs(const BoundaryConstants& c, const DerivedParams& p, int kappa) {
  if (kappa != 1 && kappa != -1) throw DomainError("kappa must be +1 or -1");
  using C = Component;
  const double nu = p.nu;
  const double k = kappa;
  const cplx rot = phase(0.5 * pi * k * nu);

  FieldCoefficients out;
  out.kappa = kappa;
  out.nu = nu;

  const double d0_scale =
      std::tgamma(0.5 * nu) * std::pow(2.0, nu - 1.0) / (std::pow(pi, 1.5) * std::cos(0.5 * pi * nu));
  const double g_three = std::tgamma(0.5 * (3.0 - nu));

  for (C j : {C::first, C::second}) {
    const int ij = index_of(j);
    const double beta_j = j == C::first ? p.beta1 : p.beta2;

    out.d0[ij] = d0_scale * (rot * c.c.at(j, SystemSign::plus) +
                             std::conj(rot) * c.c.at(j, SystemSign::minus));

    // i kappa 2^{nu-1} beta_j^{(nu-1)/2} / (pi Gamma((3-nu)/2))
    const cplx d1_scale(0.0, k * std::pow(2.0, nu - 1.0) * std::pow(beta_j, 0.5 * (nu - 1.0)) /
                                 (pi * g_three));
    out.d1[ij] = d1_scale * (loaded_phi(c, j, SystemSign::plus) - loaded_phi(c, j, SystemSign::minus));

    out.d2[ij] = -nu * out.d0[ij] / (2.0 * beta_j);

    const C q = other(j);
    const cplx e0_scale = cplx(0.0, std::pow(2.0, nu) * std::pow(beta_j, 0.5 * nu) / g_three) *
                          coeff_b(j, cplx(nu, 0.0), p);
    out.e0[ij] = e0_scale * (loaded_phi(c, q, SystemSign::plus) - loaded_phi(c, q, SystemSign::minus));

    // Cross-coupled: e_11 carries C_2, e_21 carries C_1.
    const cplx e1_scale = -(2.0 * k / pi) * coeff_b(j, cplx(1.0, 0.0), p) * std::sqrt(beta_j) *
                          std::tgamma(nu) * std::tgamma(0.5 * (1.0 - nu));
    out.e1[ij] = e1_scale * (rot * c.c.at(q, SystemSign::plus) +
                             std::conj(rot) * c.c.at(q, SystemSign::minus));
  }
  return out;
}

std::array<cplx, 2> displacement_field(const FieldCoefficients& c, double xi, double xi0,
                                       double y, double eta_max) {
  const double eta = small_eta(xi, xi0, y, eta_max);
  const double scale = std::pow(std::abs(xi - xi0), -c.nu);
  return {scale * (c.d0[0] + c.d2[0] * eta * eta), scale * (c.d0[1] + c.d2[1] * eta * eta)};
}

std::array<cplx, 2> derivative_small_eta(const FieldCoefficients& c, double xi, double xi0,
                                         double y, double eta_max) {
  const double eta = small_eta(xi, xi0, y, eta_max);
  const double rho = std::abs(xi - xi0);
  const double scale = (xi > xi0 ? 1.0 : -1.0) * std::pow(rho, -c.nu - 1.0);
  std::array<cplx, 2> out;
  for (int j = 0; j < 2; ++j)
    out[j] = scale * (-c.nu * c.d0[j] - (c.nu + 2.0) * c.d2[j] * eta * eta);
  return out;
}

std::array<cplx, 2> stress_field(const FieldCoefficients& c, double xi, double xi0, double y,
                                 const DerivedParams& p, double eta_max) {
  const double eta = small_eta(xi, xi0, y, eta_max);
  const double nu = c.nu;
  const double scale = std::pow(eta, nu) / std::abs(xi - xi0);
  const double eta2 = eta * eta;
  const cplx s12 = scale * (-nu * c.d0[1] + 2.0 * c.d2[0] * eta - (nu + 2.0) * c.d2[1] * eta2);
  const cplx s22 = scale * (-p.lame_lambda * nu * c.d0[0] + p.p_modulus * 2.0 * c.d2[1] * eta -
                            p.lame_lambda * (nu + 2.0) * c.d2[0] * eta2);
  return {s12, s22};
}

std::array<cplx, 2> derivative_large_eta(const FieldCoefficients& c, double xi, double xi0,
                                         double y, double eta_min) {
  const double rho = check_distance(xi, xi0, y);
  const double eta = y / rho;
  if (eta < eta_min) throw ExpansionRangeError(range_message("large-eta", eta, eta_min));
  const double scale = 1.0 / (pi * (xi - xi0) * std::pow(y, c.nu));
  const double tail = std::pow(eta, c.nu - 1.0);
  return {scale * (c.e0[0] + c.e1[0] * tail), scale * (c.e0[1] + c.e1[1] * tail)};
}

const char* to_string(Expansion e) {
  switch (e) {
    case Expansion::small_eta: return "small-eta";
    case Expansion::large_eta: return "large-eta";
    case Expansion::out_of_range: return "out-of-range";
  }
  return "unknown";
}

double FieldResult::max_imag_residue() const {
  double r = 0.0;
  for (const auto* v : {&u1, &u2, &du1_dxi, &du2_dxi, &s12, &s22})
    if (v->has_value()) r = std::max(r, (*v)->imag_residue);
  return r;
}

FieldResult evaluate_field(const BoundaryConstants& c, const DerivedParams& p,
                           const MaterialConfig& cfg, double xi, double y,
                           const FieldOptions& options) {
  FieldResult out;
  out.xi = xi;
  out.y = y;
  if (!std::isfinite(xi) || !std::isfinite(y) || y < 0.0)
    throw DomainError("field point must be finite with y >= 0");
  const double rho = std::abs(xi - cfg.xi0);
  if (rho == 0.0) {
    if (y == 0.0) throw SingularPointError("field requested at the load point");
    out.eta = std::numeric_limits<double>::infinity();
    return out;
  }
  out.eta = y / rho;
  const int kappa = cfg.xi0 > xi ? 1 : -1;
  const FieldCoefficients coeffs = field_coeffs(c, p, kappa);

  if (out.eta <= options.eta_max) {
    out.expansion_used = Expansion::small_eta;
    const auto u = displacement_field(coeffs, xi, cfg.xi0, y, options.eta_max);
    const auto du = derivative_small_eta(coeffs, xi, cfg.xi0, y, options.eta_max);
    const auto s = stress_field(coeffs, xi, cfg.xi0, y, p, options.eta_max);
    out.u1 = project(u[0]);
    out.u2 = project(u[1]);
    out.du1_dxi = project(du[0]);
    out.du2_dxi = project(du[1]);
    out.s12 = project(s[0]);
    out.s22 = project(s[1]);
  } else if (out.eta >= options.eta_min && y > 0.0) {
    out.expansion_used = Expansion::large_eta;
    const auto du = derivative_large_eta(coeffs, xi, cfg.xi0, y, options.eta_min);
    out.du1_dxi = project(du[0]);
    out.du2_dxi = project(du[1]);
  }

  const double residue = out.max_imag_residue();
  if (residue > options.realness_tolerance) {
    std::ostringstream os;
    os << "imaginary residue " << residue << " exceeds " << options.realness_tolerance
       << " at xi=" << xi << ", y=" << y;
    throw RealnessViolation(os.str());
  }
  return out;
}

}  // namespace movingload
