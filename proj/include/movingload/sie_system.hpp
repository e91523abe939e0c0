#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

#include "movingload/params.hpp"
#include "movingload/special_functions.hpp"

namespace movingload {

/// The two decoupled systems, tied to the sign of the Fourier variable.
enum class SystemSign { plus, minus };

constexpr double sign_value(SystemSign s) { return s == SystemSign::plus ? 1.0 : -1.0; }
constexpr int index_of(SystemSign s) { return s == SystemSign::plus ? 0 : 1; }

/// Which half of the contour an unknown lives on: the (m-) functions sample
/// G at sigma - (i/pi) ln x, the (m+) functions at sigma + (i/pi) ln x.
enum class Branch { minus, plus };

/// Oscillation exponent delta_j^{branch}.
double exponent(const DerivedParams& p, Component j, Branch b);

/// Uniform grid x_k = k/N on [0, 1]; collocation at x_1..x_N.
struct Discretization {
  std::size_t n = 0;
  std::vector<double> nodes;  // size n + 1, nodes[0] == 0
  double sigma = 0.0;
};

/// Throws ConfigError for n < 2.
Discretization build_grid(std::size_t n, const DerivedParams& p);

/// (x_n^{i delta + 1} - x_{n-1}^{i delta + 1}) / (i delta + 1) for n = 1..N,
/// with 0^{i delta + 1} taken as 0. Entry n-1 holds panel n.
std::vector<cplx> panel_weights(const Discretization& d, double delta);

/// Dense 4N x 4N complex matrix addressed as a 4 x 4 grid of N x N blocks.
class BlockMatrix {
 public:
  explicit BlockMatrix(std::size_t n);

  std::size_t block_size() const { return n_; }
  const Eigen::MatrixXcd& dense() const { return a_; }
  Eigen::MatrixXcd& dense() { return a_; }

  /// 1-based block indices, as in A_{13}.
  auto block(int row, int col) {
    return a_.block((row - 1) * n_, (col - 1) * n_, n_, n_);
  }
  auto block(int row, int col) const {
    return a_.block((row - 1) * n_, (col - 1) * n_, n_, n_);
  }

 private:
  std::size_t n_;
  Eigen::MatrixXcd a_;
};

/// Collocation matrix of one sign system. Rows are the four equations at
/// x_1..x_N; columns the unknowns F1(m-), F1(m+), F2(m-), F2(m+).
/// Throws ExponentIdentityError unless delta2^- == delta1^+ and
/// delta2^+ == delta1^-.
BlockMatrix assemble_matrix(SystemSign sign, const Discretization& d, const DerivedParams& p);

/// Right-hand side for load index m of one sign system.
Eigen::VectorXcd assemble_rhs(SystemSign sign, Component m, const Discretization& d);

/// Dense LU with partial (row) pivoting; factor once, solve many.
class LuSolver {
 public:
  /// Throws SingularMatrixError if a pivot magnitude falls below 1e-300.
  explicit LuSolver(const Eigen::MatrixXcd& a);

  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;

  double min_pivot() const { return min_pivot_; }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double min_pivot_ = 0.0;
};

/// ||A x - r||_inf / ||r||_inf (||A x||_inf when r == 0).
double relative_residual(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& x,
                         const Eigen::VectorXcd& r);

/// Piecewise-constant amplitudes F_{jk} of one (sign, m) solve.
struct UnknownBlocks {
  Eigen::VectorXcd f1_minus, f1_plus, f2_minus, f2_plus;

  static UnknownBlocks unpack(const Eigen::VectorXcd& v, std::size_t n);
  const Eigen::VectorXcd& get(Component j, Branch b) const;
  double max_abs() const;
};

struct SIESolution {
  Discretization grid;
  DerivedParams params;
  std::array<std::array<UnknownBlocks, 2>, 2> blocks;  // [sign][m]
  std::array<std::array<double, 2>, 2> residual{};      // [sign][m]

  const UnknownBlocks& at(SystemSign s, Component m) const {
    return blocks[index_of(s)][index_of(m)];
  }
  double max_residual() const;
};

/// Largest deviations, relative to max |F|, from the structural identities
/// F1(+) = s F1(-), F2(+) = -s F2(-) between the sign systems and
/// F1(m+) = s conj F1(m-), F2(m+) = -s conj F2(m-) between the branches,
/// where s = +1 for m = 1 and -1 for m = 2.
struct SymmetryResiduals {
  double sign = 0.0;
  double conjugation = 0.0;
};

SymmetryResiduals symmetry_residuals(const SIESolution& sol);

/// Assembles, factors and solves both sign systems for m = 1, 2.
SIESolution solve_system(const DerivedParams& p, const Discretization& d);
SIESolution solve_system(const MaterialConfig& cfg, std::size_t n,
                         double sigma_fraction = default_sigma_fraction);

}  // namespace movingload
