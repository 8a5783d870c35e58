#ifndef GRATOM_SWEEP_HPP_
#define GRATOM_SWEEP_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gratom/errors.hpp"
#include "gratom/perturbation.hpp"

namespace gratom {

enum class SweepMode { bare, zeeman, stark, semiclassical };

struct StateSpec {
  int n = 1;
  bool all_l = false;   // expand every l < n
  int l = 0;
  bool all_ml = false;  // expand every |m_l| <= l
  int m_l = 0;
};

struct SweepConfig {
  SweepMode mode = SweepMode::bare;
  std::vector<double> masses;  // g
  std::vector<double> radii;   // cm
  std::vector<StateSpec> states;
  double b0 = 0.0;  // G
  double e0 = 0.0;  // statV/cm
  CurvatureMode curvature_mode = CurvatureMode::leading_orthonormal;
  std::array<int, 3> axis_permutation = kIdentityPerm;
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty = stdout
  std::map<std::string, double> constant_overrides;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses the key-value sweep grammar (see README). Throws ParseError
/// with line/column on unknown keys, type mismatches, or missing grids.
SweepConfig parse_config(const std::string& text);

struct SweepRow {
  std::string mode;
  double mass, radius;
  int n, l, m_l;
  double flat_energy;
  double d_mass_quadrupole = 0.0;
  double d_nuclear_curvature = 0.0;
  double d_zeeman_flat = 0.0;
  double d_zeeman_curvature = 0.0;
  double d_stark_flat = 0.0;
  double d_stark_curvature = 0.0;
  double total;
  double weak_field_param;
  std::string warnings;  // semicolon-joined
  // semiclassical-only extras
  double rho = 0.0, v = 0.0, r_a = 0.0, residual = 0.0;
};

/// One row per (mass, radius, state), ordered lexicographically by
/// (M, r, n, l, m_l); each row is an independent library evaluation.
std::vector<SweepRow> run_sweep_rows(const SweepConfig& config);

std::string emit_csv(SweepMode mode, const std::vector<SweepRow>& rows);
std::string emit_json(SweepMode mode, const std::vector<SweepRow>& rows);

/// Full pipeline: evaluate and write to config.out_path (or stdout).
/// Returns 0 on success, 1 on config errors, 2 on precondition
/// violations; failures are described on `err`.
int run_sweep(const SweepConfig& config, std::ostream& err);

}  // namespace gratom

#endif  // GRATOM_SWEEP_HPP_
