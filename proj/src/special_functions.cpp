#include "movingload/special_functions.hpp"

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "movingload/errors.hpp"

namespace movingload {

namespace {

constexpr double pi = std::numbers::pi;

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// B_{2k} / (2k (2k - 1)), k = 1..8
constexpr std::array<double, 8> stirling_coeffs = {
    1.0 / 12.0,    -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,  -691.0 / 360360.0,  1.0 / 156.0,  -3617.0 / 122400.0};

// ln Gamma(w) for Re w >= 15, branch irrelevant (only exponentiated).
cplx stirling_log_gamma(cplx w) {
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : stirling_coeffs) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series;
}

cplx gamma_right_half(cplx z) {
  cplx shift_product = 1.0;
  cplx w = z;
  while (w.real() < 15.0) {
    shift_product *= w;
    w += 1.0;
  }
  return std::exp(stirling_log_gamma(w)) / shift_product;
}

// beta^w for a positive real base via the principal real logarithm.
cplx real_power(double base, cplx w) { return std::exp(w * std::log(base)); }

}  // namespace

cplx complex_gamma(cplx z) {
  if (!finite(z)) throw DomainError("complex_gamma: non-finite argument " + describe(z));
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("complex_gamma: pole at " + describe(z));
  if (z.real() >= 0.5) return gamma_right_half(z);
  return pi / (std::sin(pi * z) * gamma_right_half(1.0 - z));
}

cplx coeff_b(Component j, cplx s, const DerivedParams& p) {
  if (!finite(s)) throw DomainError("coeff_b: non-finite argument " + describe(s));
  const double contrast = p.a_d2 - p.a_s2;
  if (j == Component::first) {
    const cplx numer = contrast * (s - 1.0) - p.nu * p.a_s2;
    const cplx denom = 2.0 * (p.a_d2 - 1.0) * real_power(p.beta2, 0.5 * (1.0 - s)) *
                       real_power(p.beta1, 0.5 * s);
    return numer / denom;
  }
  const cplx numer = contrast * (s - 1.0) - p.nu * (p.a_d2 - 2.0 * p.a_s2);
  const cplx denom = 2.0 * (p.a_s2 - 1.0) * real_power(p.beta1, 0.5 * (1.0 - s)) *
                     real_power(p.beta2, 0.5 * s);
  return numer / denom;
}

cplx kernel_g(Component j, cplx s, const DerivedParams& p) {
  const cplx ratio = complex_gamma(1.0 - 0.5 * s) * complex_gamma(0.5 * (s - p.nu)) /
                     (complex_gamma(0.5 * (s + 1.0 - p.nu)) * complex_gamma(0.5 * (3.0 - s)));
  return coeff_b(j, s, p) * ratio;
}

cplx rhs_f(double x, double sigma) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("rhs_f: x outside (0, 1]");
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("rhs_f: sigma outside (0, 1)");
  const cplx half_turn = std::polar(1.0, 0.5 * pi * sigma);
  return cplx(0.0, 4.0 * pi) / (x * half_turn + std::conj(half_turn));
}

cplx mellin_m_series(double x, double delta) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("mellin_m_series: x outside (0, 1)");
  if (!std::isfinite(delta) || delta == 0.0)
    throw DomainError("mellin_m_series: delta must be finite and nonzero");

  const cplx i_delta(0.0, delta);
  cplx sum = cplx(0.0, pi) * real_power(x, i_delta) / std::sinh(pi * delta);
  double power = 1.0;  // (-1)^j x^j
  constexpr int max_terms = 10000;
  for (int j = 0; j < max_terms; ++j) {
    const cplx term = power / (i_delta - static_cast<double>(j));
    sum += term;
    if (std::abs(term) < 1e-14 * std::abs(sum)) return sum;
    power *= -x;
  }
  std::ostringstream os;
  os << "mellin_m_series: no convergence in " << max_terms << " terms at x=" << x;
  throw DomainError(os.str());
}

cplx mellin_m_quadrature(double x, double delta) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("mellin_m_quadrature: x outside (0, 1]");
  if (!std::isfinite(delta)) throw DomainError("mellin_m_quadrature: non-finite delta");

  // y = e^{-t}: integrand e^{-t} e^{-i delta t} / (e^{-t} + x), tail ~ e^{-t} / x.
  const double upper = 40.0 + std::log(1.0 / x);
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr unsigned depth = 20;
  constexpr double tol = 1e-14;
  const double re = Rule::integrate(
      [=](double t) {
        const double e = std::exp(-t);
        return e * std::cos(delta * t) / (e + x);
      },
      0.0, upper, depth, tol);
  const double im = Rule::integrate(
      [=](double t) {
        const double e = std::exp(-t);
        return -e * std::sin(delta * t) / (e + x);
      },
      0.0, upper, depth, tol);
  return {re, im};
}

cplx mellin_m(double x, double delta) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("mellin_m: x outside (0, 1]");
  if (!std::isfinite(delta) || delta == 0.0)
    throw DomainError("mellin_m: delta must be finite and nonzero");
  if (x <= 0.9) return mellin_m_series(x, delta);
  return mellin_m_quadrature(x, delta);
}

}  // namespace movingload
