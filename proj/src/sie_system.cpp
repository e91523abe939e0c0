#include "movingload/sie_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "movingload/errors.hpp"

namespace movingload {

namespace {

constexpr double pi = std::numbers::pi;

// x^{a} for x >= 0 with complex a, Re a > 0; 0^a == 0.
cplx node_power(double x, cplx a) {
  if (x == 0.0) return 0.0;
  return std::exp(a * std::log(x));
}

Eigen::MatrixXcd singular_block(const Discretization& d, double delta) {
  const std::size_t n = d.n;
  const auto w = panel_weights(d, delta);
  Eigen::MatrixXcd b(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double xk = d.nodes[k];
    cplx correction = 0.0;
    for (std::size_t col = 2; col <= n; ++col) {
      const cplx entry = w[col - 1] / (d.nodes[col - 1] + xk);
      b(k - 1, col - 1) = entry;
      correction += entry;
    }
    b(k - 1, 0) = mellin_m(xk, delta) - correction;
  }
  return b;
}

Eigen::MatrixXcd regular_block(const Discretization& d, double delta) {
  const std::size_t n = d.n;
  const auto w = panel_weights(d, delta);
  Eigen::MatrixXcd b(n, n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t col = 1; col <= n; ++col)
      b(k - 1, col - 1) = w[col - 1] / (1.0 + d.nodes[col - 1] * d.nodes[k]);
  return b;
}

// +-2 pi i x_k^{i delta} / G_j(sigma -+ (i/pi) ln x_k)
Eigen::VectorXcd diagonal_entries(SystemSign sign, const Discretization& d,
                                  const DerivedParams& p, Component g_index,
                                  Branch branch, double delta) {
  const double s = sign_value(sign);
  const double turn = branch == Branch::minus ? -1.0 : 1.0;
  Eigen::VectorXcd diag(d.n);
  for (std::size_t k = 1; k <= d.n; ++k) {
    const double xk = d.nodes[k];
    const cplx arg(p.sigma, turn * std::log(xk) / pi);
    diag(k - 1) = s * cplx(0.0, 2.0 * pi) * node_power(xk, cplx(0.0, delta)) /
                  kernel_g(g_index, arg, p);
  }
  return diag;
}

}  // namespace

double exponent(const DerivedParams& p, Component j, Branch b) {
  if (j == Component::first) return b == Branch::minus ? p.delta1_minus : p.delta1_plus;
  return b == Branch::minus ? p.delta2_minus : p.delta2_plus;
}

Discretization build_grid(std::size_t n, const DerivedParams& p) {
  if (n < 2) throw ConfigError("grid size n must be at least 2");
  Discretization d;
  d.n = n;
  d.sigma = p.sigma;
  d.nodes.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    d.nodes[k] = static_cast<double>(k) / static_cast<double>(n);
  return d;
}

std::vector<cplx> panel_weights(const Discretization& d, double delta) {
  const cplx a(1.0, delta);
  std::vector<cplx> w(d.n);
  cplx left = node_power(d.nodes[0], a);
  for (std::size_t k = 1; k <= d.n; ++k) {
    const cplx right = node_power(d.nodes[k], a);
    w[k - 1] = (right - left) / a;
    left = right;
  }
  return w;
}

BlockMatrix::BlockMatrix(std::size_t n)
    : n_(n), a_(Eigen::MatrixXcd::Zero(4 * n, 4 * n)) {}

BlockMatrix assemble_matrix(SystemSign sign, const Discretization& d, const DerivedParams& p) {
  if (p.delta2_minus != p.delta1_plus || p.delta2_plus != p.delta1_minus) {
    std::ostringstream os;
    os.precision(17);
    os << "exponent pairing violated: delta2- = " << p.delta2_minus
       << ", delta1+ = " << p.delta1_plus << ", delta2+ = " << p.delta2_plus
       << ", delta1- = " << p.delta1_minus;
    throw ExponentIdentityError(os.str());
  }
  const double dm = p.delta1_minus;
  const double dp = p.delta1_plus;

  BlockMatrix a(d.n);
  a.block(1, 1).diagonal() =
      diagonal_entries(sign, d, p, Component::second, Branch::minus, dm);
  a.block(2, 2).diagonal() =
      diagonal_entries(sign, d, p, Component::second, Branch::plus, dp);
  a.block(3, 3).diagonal() =
      diagonal_entries(sign, d, p, Component::first, Branch::minus, dp);
  a.block(4, 4).diagonal() =
      diagonal_entries(sign, d, p, Component::first, Branch::plus, dm);

  const Eigen::MatrixXcd a13 = singular_block(d, dp);
  const Eigen::MatrixXcd a24 = singular_block(d, dm);
  const Eigen::MatrixXcd a14 = regular_block(d, dm);
  const Eigen::MatrixXcd a23 = regular_block(d, dp);

  a.block(1, 3) = a13;
  a.block(1, 4) = a14;
  a.block(2, 3) = a23;
  a.block(2, 4) = a24;
  a.block(3, 1) = a24;
  a.block(3, 2) = a23;
  a.block(4, 1) = a14;
  a.block(4, 2) = a13;
  return a;
}

Eigen::VectorXcd assemble_rhs(SystemSign sign, Component m, const Discretization& d) {
  const std::size_t n = d.n;
  const double s = sign_value(sign);
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(4 * n);
  const std::size_t offset = m == Component::first ? 0 : 2 * n;
  for (std::size_t k = 1; k <= n; ++k) {
    const cplx f = rhs_f(d.nodes[k], d.sigma);
    r(offset + k - 1) = -s * f;
    r(offset + n + k - 1) = s * std::conj(f);
  }
  return r;
}

LuSolver::LuSolver(const Eigen::MatrixXcd& a) : lu_(a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw SingularMatrixError("LU requires a non-empty square matrix");
  min_pivot_ = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot_ >= 1e-300)) {
    std::ostringstream os;
    os << "pivot magnitude " << min_pivot_ << " below 1e-300";
    throw SingularMatrixError(os.str());
  }
}

Eigen::VectorXcd LuSolver::solve(const Eigen::VectorXcd& rhs) const { return lu_.solve(rhs); }

Eigen::MatrixXcd LuSolver::solve(const Eigen::MatrixXcd& rhs) const { return lu_.solve(rhs); }

double relative_residual(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& x,
                         const Eigen::VectorXcd& r) {
  const double num = (a * x - r).cwiseAbs().maxCoeff();
  const double den = r.cwiseAbs().maxCoeff();
  return den > 0.0 ? num / den : num;
}

UnknownBlocks UnknownBlocks::unpack(const Eigen::VectorXcd& v, std::size_t n) {
  const auto len = static_cast<Eigen::Index>(n);
  return {v.segment(0, len), v.segment(len, len), v.segment(2 * len, len),
          v.segment(3 * len, len)};
}

const Eigen::VectorXcd& UnknownBlocks::get(Component j, Branch b) const {
  if (j == Component::first) return b == Branch::minus ? f1_minus : f1_plus;
  return b == Branch::minus ? f2_minus : f2_plus;
}

double UnknownBlocks::max_abs() const {
  return std::max({f1_minus.cwiseAbs().maxCoeff(), f1_plus.cwiseAbs().maxCoeff(),
                   f2_minus.cwiseAbs().maxCoeff(), f2_plus.cwiseAbs().maxCoeff()});
}

double SIESolution::max_residual() const {
  double r = 0.0;
  for (const auto& row : residual)
    for (double v : row) r = std::max(r, v);
  return r;
}

SymmetryResiduals symmetry_residuals(const SIESolution& sol) {
  using C = Component;
  SymmetryResiduals out;
  for (C m : {C::first, C::second}) {
    const double s = m == C::first ? 1.0 : -1.0;
    const UnknownBlocks& plus = sol.at(SystemSign::plus, m);
    const UnknownBlocks& minus = sol.at(SystemSign::minus, m);
    const double scale = std::max(plus.max_abs(), minus.max_abs());
    if (scale == 0.0) continue;
    for (Branch b : {Branch::minus, Branch::plus}) {
      out.sign = std::max(out.sign, (plus.get(C::first, b) - s * minus.get(C::first, b))
                                            .cwiseAbs().maxCoeff() / scale);
      out.sign = std::max(out.sign, (plus.get(C::second, b) + s * minus.get(C::second, b))
                                            .cwiseAbs().maxCoeff() / scale);
    }
    for (const UnknownBlocks* f : {&plus, &minus}) {
      out.conjugation =
          std::max(out.conjugation,
                   (f->f1_plus - s * f->f1_minus.conjugate()).cwiseAbs().maxCoeff() / scale);
      out.conjugation =
          std::max(out.conjugation,
                   (f->f2_plus + s * f->f2_minus.conjugate()).cwiseAbs().maxCoeff() / scale);
    }
  }
  return out;
}

SIESolution solve_system(const DerivedParams& p, const Discretization& d) {
  SIESolution sol;
  sol.grid = d;
  sol.params = p;
  for (SystemSign sign : {SystemSign::plus, SystemSign::minus}) {
    const BlockMatrix a = assemble_matrix(sign, d, p);
    const LuSolver lu(a.dense());
    for (Component m : {Component::first, Component::second}) {
      const Eigen::VectorXcd r = assemble_rhs(sign, m, d);
      const Eigen::VectorXcd x = lu.solve(r);
      sol.blocks[index_of(sign)][index_of(m)] = UnknownBlocks::unpack(x, d.n);
      sol.residual[index_of(sign)][index_of(m)] = relative_residual(a.dense(), x, r);
    }
  }
  return sol;
}

SIESolution solve_system(const MaterialConfig& cfg, std::size_t n, double sigma_fraction) {
  const DerivedParams p = derive_params(cfg, sigma_fraction);
  return solve_system(p, build_grid(n, p));
}

}  // namespace movingload
