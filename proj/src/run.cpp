#include "movingload/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "movingload/errors.hpp"

namespace movingload {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json pair_json(const std::array<cplx, 2>& v) {
  return json::array({complex_json(v[0]), complex_json(v[1])});
}

json field_json(const std::optional<FieldValue>& v) {
  if (!v) return nullptr;
  return json{{"value", v->value}, {"imag_residue", v->imag_residue}};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

SweepRow sweep_point(const RunConfig& rc, double value) {
  SweepRow row;
  row.value = value;
  MaterialConfig cfg = rc.material;
  (rc.sweep == SweepAxis::nu ? cfg.nu : cfg.speed_ratio) = value;
  try {
    const CaseSolution sol = solve_case(cfg, rc.n, rc.sigma_fraction);
    row.delta = sol.constants.delta.plus;
    const QueryPoint& q = rc.points.front();
    row.field = evaluate_field(sol.constants, sol.params, cfg, q.xi, q.y, rc.field);
  } catch (const Error& e) {
    row.field.reset();
    row.error = e.name() + ": " + e.what();
  }
  return row;
}

}  // namespace

SweepRange parse_sweep_range(const std::string& text) {
  SweepRange r;
  std::istringstream is(text);
  char c1 = 0, c2 = 0;
  if (!(is >> r.start >> c1 >> r.stop >> c2 >> r.step) || c1 != ':' || c2 != ':' ||
      !(is >> std::ws).eof())
    throw ConfigError("sweep range '" + text + "' is not of the form a:b:step");
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !(r.step > 0.0))
    throw ConfigError("sweep range '" + text + "' needs finite bounds and step > 0");
  return r;
}

std::vector<double> sweep_values(const SweepRange& range) {
  std::vector<double> out;
  if (!(range.step > 0.0) || range.start > range.stop) return out;
  const double slack = 1e-9 * range.step;
  for (std::size_t i = 0;; ++i) {
    const double v = range.start + static_cast<double>(i) * range.step;
    if (v > range.stop + slack) break;
    out.push_back(v);
  }
  return out;
}

void RunConfig::validate() const {
  material.validate();
  if (n < 2) throw ConfigError("n must be at least 2");
  if (!(sigma_fraction > 0.0 && sigma_fraction < 1.0))
    throw ConfigError("sigma_fraction must lie in (0, 1)");
  if (points.empty()) throw ConfigError("at least one query point is required");
  if (!(field.eta_max > 0.0) || !(field.eta_min >= field.eta_max))
    throw ConfigError("expansion limits need 0 < eta_max <= eta_min");
  for (const auto& q : points)
    if (!std::isfinite(q.xi) || !std::isfinite(q.y) || q.y < 0.0)
      throw ConfigError("query points need finite xi and y >= 0");
  if (sweep != SweepAxis::none) {
    for (double v : sweep_values(range))
      if (!(v > 0.0 && v < 1.0)) {
        std::ostringstream os;
        os << "sweep value " << v << " outside (0, 1)";
        if (sweep == SweepAxis::speed && v >= 1.0) throw SubsonicViolation(os.str());
        throw ConfigError(os.str());
      }
  }
}

CaseSolution solve_case(const MaterialConfig& cfg, std::size_t n, double sigma_fraction) {
  CaseSolution sol;
  sol.cfg = cfg;
  sol.params = derive_params(cfg, sigma_fraction);
  sol.sie = solve_system(sol.params, build_grid(n, sol.params));
  sol.constants = boundary_constants(sol.sie, cfg);
  return sol;
}

CaseReport run_case(const RunConfig& rc) {
  rc.validate();
  CaseReport report;
  report.solution = solve_case(rc.material, rc.n, rc.sigma_fraction);
  const CaseSolution& s = report.solution;
  for (const auto& q : rc.points)
    report.fields.push_back(evaluate_field(s.constants, s.params, s.cfg, q.xi, q.y, rc.field));
  return report;
}

std::string case_report_json(const CaseReport& report) {
  const CaseSolution& s = report.solution;
  const DerivedParams& p = s.params;
  json doc;
  doc["config"] = {{"nu", s.cfg.nu},   {"nu_p", s.cfg.nu_p}, {"speed_ratio", s.cfg.speed_ratio},
                   {"h1", s.cfg.h1},   {"h2", s.cfg.h2},     {"xi0", s.cfg.xi0},
                   {"n", s.sie.grid.n}};
  doc["derived"] = {{"a_d", p.a_d},
                    {"a_s", p.a_s},
                    {"beta1", p.beta1},
                    {"beta2", p.beta2},
                    {"beta", p.beta},
                    {"eps", p.eps},
                    {"lam1", p.lam1},
                    {"lam2", p.lam2},
                    {"r", p.r_param},
                    {"l", p.l_param},
                    {"delta1_minus", p.delta1_minus},
                    {"delta2_minus", p.delta2_minus},
                    {"delta1_plus", p.delta1_plus},
                    {"delta2_plus", p.delta2_plus},
                    {"sigma", p.sigma},
                    {"gamma1", p.gamma1},
                    {"gamma2", p.gamma2}};
  const BoundaryConstants& c = s.constants;
  doc["delta_plus"] = complex_json(c.delta.plus);
  doc["delta_minus"] = complex_json(c.delta.minus);
  doc["constants"] = {{"c1_plus", complex_json(c.c.c1_plus)},
                      {"c1_minus", complex_json(c.c.c1_minus)},
                      {"c2_plus", complex_json(c.c.c2_plus)},
                      {"c2_minus", complex_json(c.c.c2_minus)}};
  json coeffs = json::array();
  for (int kappa : {1, -1}) {
    const FieldCoefficients fc = field_coeffs(c, p, kappa);
    coeffs.push_back({{"kappa", kappa},
                      {"d0", pair_json(fc.d0)},
                      {"d1", pair_json(fc.d1)},
                      {"d2", pair_json(fc.d2)},
                      {"e0", pair_json(fc.e0)},
                      {"e1", pair_json(fc.e1)}});
  }
  doc["coefficients"] = coeffs;
  doc["diagnostics"] = {{"max_solve_residual", s.sie.max_residual()}};

  json fields = json::array();
  for (const FieldResult& f : report.fields) {
    fields.push_back({{"xi", f.xi},
                      {"y", f.y},
                      {"eta", std::isfinite(f.eta) ? json(f.eta) : json(nullptr)},
                      {"expansion_used", to_string(f.expansion_used)},
                      {"u1", field_json(f.u1)},
                      {"u2", field_json(f.u2)},
                      {"du1_dxi", field_json(f.du1_dxi)},
                      {"du2_dxi", field_json(f.du2_dxi)},
                      {"s12", field_json(f.s12)},
                      {"s22", field_json(f.s22)}});
  }
  doc["fields"] = fields;
  return doc.dump(2);
}

std::vector<SweepRow> run_sweep(const RunConfig& rc) {
  rc.validate();
  if (rc.sweep == SweepAxis::none) throw ConfigError("run_sweep needs a sweep axis");
  const std::vector<double> values = sweep_values(rc.range);
  std::vector<SweepRow> rows(values.size());
  const std::size_t workers = std::clamp<std::size_t>(rc.jobs, 1, std::max<std::size_t>(values.size(), 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < values.size(); i += workers) rows[i] = sweep_point(rc, values[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "sweep_value,u1,u2,du1_dxi,du2_dxi,s12,s22,delta_re,delta_im,error\r\n";
  const auto cell = [](const std::optional<FieldValue>& v) {
    return v ? format_number(v->value) : std::string();
  };
  for (const SweepRow& r : rows) {
    os << format_number(r.value);
    if (r.field) {
      const FieldResult& f = *r.field;
      os << ',' << cell(f.u1) << ',' << cell(f.u2) << ',' << cell(f.du1_dxi) << ','
         << cell(f.du2_dxi) << ',' << cell(f.s12) << ',' << cell(f.s22) << ','
         << format_number(r.delta.real()) << ',' << format_number(r.delta.imag());
    } else {
      os << ",,,,,,,,";
    }
    os << ',' << csv_escape(r.error) << "\r\n";
  }
}

}  // namespace movingload
