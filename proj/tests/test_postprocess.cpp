#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "movingload/errors.hpp"
#include "movingload/postprocess.hpp"
#include "movingload/run.hpp"

using namespace movingload;
using C = Component;

namespace {

constexpr double pi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

MaterialConfig with_loads(double h1, double h2) {
  MaterialConfig cfg;
  cfg.h1 = h1;
  cfg.h2 = h2;
  return cfg;
}

const CaseSolution& default_case(std::size_t n = 50) {
  static const CaseSolution s50 = solve_case(MaterialConfig{}, 50);
  static const CaseSolution s100 = solve_case(MaterialConfig{}, 100);
  return n == 50 ? s50 : s100;
}

}  // namespace

TEST_CASE("zero kernel leaves only the free term") {
  const DerivedParams p = derive_params(MaterialConfig{});
  SIESolution sol;
  sol.grid = build_grid(8, p);
  sol.params = p;
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
  for (auto& row : sol.blocks)
    for (auto& b : row) b = UnknownBlocks{zero, zero, zero, zero};
  const BoundaryPhi phi = boundary_phi(sol);
  const double head = 1.0 / std::cos(0.5 * pi * p.nu);
  for (C j : {C::first, C::second})
    for (C m : {C::first, C::second})
      for (SystemSign s : {SystemSign::plus, SystemSign::minus})
        CHECK(phi.at(j, m, s) == cplx(j == m ? -head : 0.0));
}

TEST_CASE("determinants against independently computed values") {
  // Reference values from a separate NumPy implementation of the scheme.
  struct Case {
    std::size_t n;
    double frac;
    cplx want;
  };
  const Case cases[] = {
      {50, 0.25, {0.98207, -2.0129e-4}},
      {75, 0.25, {0.99437, -1.6670e-4}},
      {100, 0.25, {1.000743, -1.44014e-4}},
      {100, 0.5, {0.995263, -1.50861e-4}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.frac);
    const CaseSolution sol = solve_case(MaterialConfig{}, c.n, c.frac);
    const Determinants& d = sol.constants.delta;
    CHECK(std::abs(d.plus.real() - c.want.real()) < 1e-5);
    CHECK(std::abs(d.plus.imag() - c.want.imag()) < 1e-8);
    CHECK(std::abs(d.plus - d.minus) <= 1e-12);
    CHECK(std::abs(d.plus.imag()) <= 2e-3 * std::abs(d.plus.real()));
  }
}

TEST_CASE("determinant drift between N = 50 and N = 100 is bounded") {
  CHECK(std::abs(default_case(100).constants.delta.plus - default_case(50).constants.delta.plus) <=
        0.05);
}

TEST_CASE("degenerate determinant is rejected") {
  BoundaryPhi phi;
  CHECK_THROWS_AS(determinant_delta(phi), DegenerateDeterminant);
  Determinants tiny{1e-9, 1e-9};
  CHECK_THROWS_AS(constants_c(phi, tiny, MaterialConfig{}, derive_params(MaterialConfig{})),
                  DegenerateDeterminant);
}

TEST_CASE("load constants are linear in the loads") {
  const CaseSolution& base = default_case();
  const BoundaryPhi& phi = base.constants.phi;
  const Determinants& delta = base.constants.delta;
  const DerivedParams& p = base.params;
  const LoadConstants both = constants_c(phi, delta, with_loads(-1.0, -1.0), p);
  const LoadConstants only1 = constants_c(phi, delta, with_loads(-1.0, 0.0), p);
  const LoadConstants only2 = constants_c(phi, delta, with_loads(0.0, -1.0), p);
  const LoadConstants scaled = constants_c(phi, delta, with_loads(-2.5, -2.5), p);
  for (C j : {C::first, C::second})
    for (SystemSign s : {SystemSign::plus, SystemSign::minus}) {
      CHECK(rel(only1.at(j, s) + only2.at(j, s), both.at(j, s)) <= 1e-14);
      CHECK(rel(scaled.at(j, s), 2.5 * both.at(j, s)) <= 1e-14);
    }
  // With H2 = 0 only the product H1 gamma1 matters.
  DerivedParams q = p;
  q.gamma1 *= 2.0;
  const LoadConstants doubled = constants_c(phi, delta, with_loads(-0.5, 0.0), q);
  for (C j : {C::first, C::second})
    for (SystemSign s : {SystemSign::plus, SystemSign::minus})
      CHECK(rel(doubled.at(j, s), only1.at(j, s)) <= 1e-14);
}

TEST_CASE("load constants are close to conjugate pairs") {
  // Strict 1e-8 gate lives in the acceptance suite; here the observed
  // discretization level is pinned.
  const LoadConstants& c = default_case(100).constants.c;
  const double scale = std::max(std::abs(c.c1_plus), std::abs(c.c2_plus));
  const double mismatch = std::max(std::abs(c.c1_plus - std::conj(c.c1_minus)),
                                   std::abs(c.c2_plus - std::conj(c.c2_minus))) / scale;
  MESSAGE("C conjugation mismatch " << mismatch);
  CHECK(mismatch < 1e-3);
}

TEST_CASE("expansion coefficients") {
  const CaseSolution& s = default_case(100);
  for (int kappa : {1, -1}) {
    CAPTURE(kappa);
    const FieldCoefficients fc = field_coeffs(s.constants, s.params, kappa);
    for (int j = 0; j < 2; ++j) {
      const double beta_j = j == 0 ? s.params.beta1 : s.params.beta2;
      CHECK(rel(fc.d2[j] / fc.d0[j], -s.params.nu / (2.0 * beta_j)) <= 1e-15);
      CHECK(std::abs(fc.d1[j]) <= 1e-3 * std::abs(fc.d0[j]));
      CHECK(std::abs(fc.e0[j]) <= 1e-3 * std::abs(fc.e1[j]));
    }
  }
  CHECK_THROWS_AS(field_coeffs(s.constants, s.params, 0), DomainError);
}

TEST_CASE("small-eta displacement and its derivative") {
  const CaseSolution& s = default_case();
  const FieldCoefficients fc = field_coeffs(s.constants, s.params, 1);
  const double xi = -1.3, y = 0.4;
  const auto u = displacement_field(fc, xi, 0.0, y);
  const double rho = 1.3, eta = y / rho;
  for (int j = 0; j < 2; ++j) {
    const double beta_j = j == 0 ? s.params.beta1 : s.params.beta2;
    const cplx want = fc.d0[j] * std::pow(rho, -s.params.nu) *
                      (1.0 - s.params.nu / (2.0 * beta_j) * eta * eta);
    CHECK(rel(u[j], want) <= 1e-14);
  }
  // central difference in xi
  const double h = 1e-5;
  const auto up = displacement_field(fc, xi + h, 0.0, y);
  const auto dn = displacement_field(fc, xi - h, 0.0, y);
  const auto du = derivative_small_eta(fc, xi, 0.0, y);
  for (int j = 0; j < 2; ++j) CHECK(rel((up[j] - dn[j]) / (2.0 * h), du[j]) <= 1e-8);
  // y = 0 closed form
  const auto du0 = derivative_small_eta(fc, -2.0, 0.0, 0.0);
  for (int j = 0; j < 2; ++j)
    CHECK(rel(du0[j], s.params.nu * fc.d0[j] * std::pow(2.0, -s.params.nu - 1.0)) <= 1e-14);
}

TEST_CASE("stresses vanish like eta^nu near the surface") {
  const CaseSolution& s = default_case();
  const FieldCoefficients fc = field_coeffs(s.constants, s.params, 1);
  const auto at0 = stress_field(fc, -1.0, 0.0, 0.0, s.params);
  CHECK(at0[0] == cplx(0.0));
  CHECK(at0[1] == cplx(0.0));
  const auto a = stress_field(fc, -1.0, 0.0, 1e-6, s.params);
  const auto b = stress_field(fc, -1.0, 0.0, 2e-6, s.params);
  for (int j = 0; j < 2; ++j) CHECK(std::abs(b[j] / a[j]) == doctest::Approx(std::pow(2.0, s.params.nu)).epsilon(1e-4));
}

TEST_CASE("large-eta derivative") {
  const CaseSolution& s = default_case();
  const FieldCoefficients fc = field_coeffs(s.constants, s.params, 1);
  // the eta^{nu-1} term decays relative to the leading constant
  const double y = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (double eta : {2.0, 8.0, 32.0, 128.0}) {
    const double xi = -y / eta;
    const auto du = derivative_large_eta(fc, xi, 0.0, y);
    const double tail = std::abs(fc.e1[0]) * std::pow(eta, s.params.nu - 1.0);
    const double share = tail / std::abs(du[0] * pi * xi * std::pow(y, s.params.nu));
    CHECK(share <= last + 1e-15);
    last = share;
  }
  CHECK_THROWS_AS(derivative_large_eta(fc, -1.0, 0.0, 1.0), ExpansionRangeError);
}

TEST_CASE("expansion ranges and singular points") {
  const CaseSolution& s = default_case();
  const FieldCoefficients fc = field_coeffs(s.constants, s.params, 1);
  CHECK_THROWS_AS(displacement_field(fc, -1.0, 0.0, 1.5), ExpansionRangeError);
  CHECK_THROWS_AS(displacement_field(fc, 0.0, 0.0, 0.0), SingularPointError);
  CHECK_THROWS_AS(stress_field(fc, -1.0, 0.0, 1.2, s.params), ExpansionRangeError);

  const MaterialConfig cfg;
  CHECK_THROWS_AS(evaluate_field(s.constants, s.params, cfg, 0.0, 0.0), SingularPointError);
  CHECK_THROWS_AS(evaluate_field(s.constants, s.params, cfg, -1.0, -0.1), DomainError);

  const FieldResult gap = evaluate_field(s.constants, s.params, cfg, -1.0, 1.5);
  CHECK(gap.expansion_used == Expansion::out_of_range);
  CHECK_FALSE(gap.u1.has_value());
  CHECK_FALSE(gap.du1_dxi.has_value());

  const FieldResult below = evaluate_field(s.constants, s.params, cfg, 0.0, 1.0);
  CHECK(below.expansion_used == Expansion::out_of_range);
  CHECK(std::isinf(below.eta));

  const FieldResult deep = evaluate_field(s.constants, s.params, cfg, -0.1, 1.0);
  CHECK(deep.expansion_used == Expansion::large_eta);
  CHECK(deep.du1_dxi.has_value());
  CHECK_FALSE(deep.u1.has_value());

  const FieldResult near = evaluate_field(s.constants, s.params, cfg, -1.0, 0.5);
  CHECK(near.expansion_used == Expansion::small_eta);
  CHECK(near.u1.has_value());
  CHECK(near.s22.has_value());
}

TEST_CASE("realness gate") {
  const CaseSolution& s = default_case();
  FieldOptions strict;
  strict.realness_tolerance = 1e-12;
  CHECK_THROWS_AS(evaluate_field(s.constants, s.params, MaterialConfig{}, -1.0, 0.3, strict),
                  RealnessViolation);
  const FieldResult f = evaluate_field(s.constants, s.params, MaterialConfig{}, -1.0, 0.3);
  CHECK(f.max_imag_residue() <= 1e-2);
}

TEST_CASE("results barely depend on the contour abscissa") {
  const CaseSolution& quarter = default_case(100);
  const CaseSolution half = solve_case(MaterialConfig{}, 100, 0.5);
  const auto spread = [](cplx a, cplx b) { return std::abs(a - b) / std::abs(a); };
  CHECK(spread(quarter.constants.delta.plus, half.constants.delta.plus) <= 6e-3);
  for (C j : {C::first, C::second})
    for (SystemSign sg : {SystemSign::plus, SystemSign::minus})
      CHECK(spread(quarter.constants.c.at(j, sg), half.constants.c.at(j, sg)) <= 6e-3);
  const FieldCoefficients a = field_coeffs(quarter.constants, quarter.params, 1);
  const FieldCoefficients b = field_coeffs(half.constants, half.params, 1);
  for (int j = 0; j < 2; ++j) CHECK(spread(a.d0[j], b.d0[j]) <= 6e-3);
}

TEST_CASE("fields superpose over the two load components") {
  const auto u = [](double h1, double h2) {
    const CaseSolution s = solve_case(with_loads(h1, h2), 50);
    const FieldCoefficients fc = field_coeffs(s.constants, s.params, 1);
    return std::make_pair(displacement_field(fc, -1.0, 0.0, 0.5),
                          stress_field(fc, -1.0, 0.0, 0.3, s.params));
  };
  const auto both = u(-1.0, -0.7);
  const auto one = u(-1.0, 0.0);
  const auto two = u(0.0, -0.7);
  for (int j = 0; j < 2; ++j) {
    CHECK(rel(one.first[j] + two.first[j], both.first[j]) <= 1e-10);
    CHECK(rel(one.second[j] + two.second[j], both.second[j]) <= 1e-10);
  }
}

TEST_CASE("surface displacement decreases with the grading exponent") {
  double last1 = std::numeric_limits<double>::infinity(), last2 = last1;
  for (double nu : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    MaterialConfig cfg;
    cfg.nu = nu;
    const CaseSolution s = solve_case(cfg, 50);
    const FieldResult f = evaluate_field(s.constants, s.params, cfg, -1.0, 0.0);
    CHECK(f.u1->value < last1);
    CHECK(f.u2->value < last2);
    last1 = f.u1->value;
    last2 = f.u2->value;
  }
}
