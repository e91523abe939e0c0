#pragma once

#include <complex>

#include "movingload/params.hpp"

namespace movingload {

using cplx = std::complex<double>;

/// Which of the two displacement components (or right-hand sides) a
/// quantity belongs to.
enum class Component { first = 1, second = 2 };

constexpr Component other(Component j) {
  return j == Component::first ? Component::second : Component::first;
}

constexpr int index_of(Component j) { return j == Component::first ? 0 : 1; }

/// Gamma function of a complex argument. Stirling series after upward
/// recurrence, reflection for Re z < 1/2. Relative error ~1e-13 for
/// |Im z| <= 60, 0.01 <= |z| <= 100.
/// Throws PoleError at non-positive integers, DomainError on non-finite z.
cplx complex_gamma(cplx z);

/// Rational-power prefactor b_j(s) of the Carleman coefficients.
cplx coeff_b(Component j, cplx s, const DerivedParams& p);

/// Carleman coefficient G_j(s) = b_j(s) Gamma(1 - s/2) Gamma((s - nu)/2)
///   / [Gamma((s + 1 - nu)/2) Gamma((3 - s)/2)].
cplx kernel_g(Component j, cplx s, const DerivedParams& p);

/// Right-hand side f(x) = 4 pi i / (x e^{i pi sigma/2} + e^{-i pi sigma/2}).
cplx rhs_f(double x, double sigma);

/// M(x, delta) = int_0^1 y^{i delta} / (y + x) dy for 0 < x <= 1.
///
/// Residue series for x <= 0.9, adaptive quadrature of the defining
/// integral above that (the alternating series stalls as x -> 1).
cplx mellin_m(double x, double delta);

/// Residue series pi i x^{i delta} / sinh(pi delta) + sum_j (-1)^j x^j / (i delta - j).
/// Valid for 0 < x < 1; throws DomainError if 10000 terms do not converge.
cplx mellin_m_series(double x, double delta);

/// Adaptive Gauss-Kronrod quadrature of the defining integral after y = e^{-t}.
cplx mellin_m_quadrature(double x, double delta);

}  // namespace movingload
