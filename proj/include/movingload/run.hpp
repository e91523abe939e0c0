#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "movingload/params.hpp"
#include "movingload/postprocess.hpp"
#include "movingload/sie_system.hpp"

namespace movingload {

enum class SweepAxis { none, nu, speed };

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

/// Parses "a:b:step". Throws ConfigError on malformed input or step <= 0.
SweepRange parse_sweep_range(const std::string& text);

/// start, start + step, ... up to stop (inclusive, with a small slack);
/// empty when start > stop.
std::vector<double> sweep_values(const SweepRange& range);

struct QueryPoint {
  double xi = -1.0;
  double y = 0.0;
};

struct RunConfig {
  MaterialConfig material;
  std::size_t n = 100;
  double sigma_fraction = default_sigma_fraction;
  std::vector<QueryPoint> points{QueryPoint{}};
  SweepAxis sweep = SweepAxis::none;
  SweepRange range;
  FieldOptions field;
  unsigned jobs = 1;

  /// Throws SubsonicViolation / ConfigError.
  void validate() const;
};

/// Everything computed for one material configuration.
struct CaseSolution {
  MaterialConfig cfg;
  DerivedParams params;
  SIESolution sie;
  BoundaryConstants constants;
};

CaseSolution solve_case(const MaterialConfig& cfg, std::size_t n,
                        double sigma_fraction = default_sigma_fraction);

struct CaseReport {
  CaseSolution solution;
  std::vector<FieldResult> fields;
};

CaseReport run_case(const RunConfig& rc);

/// JSON document with derived parameters, determinants, load constants,
/// expansion coefficients and one entry per query point.
std::string case_report_json(const CaseReport& report);

struct SweepRow {
  double value = 0.0;
  std::optional<FieldResult> field;
  cplx delta;
  std::string error;  // "Name: message" when the point failed
};

/// One row per sweep value, evaluated at the first query point. Per-point
/// failures are recorded in the row and the sweep continues.
std::vector<SweepRow> run_sweep(const RunConfig& rc);

/// Header: sweep_value,u1,u2,du1_dxi,du2_dxi,s12,s22,delta_re,delta_im,error.
/// Numbers use 10 significant digits; unavailable fields are empty cells.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace movingload
