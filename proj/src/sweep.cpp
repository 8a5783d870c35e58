#include "gratom/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gratom/semiclassical.hpp"

namespace gratom {

namespace {

const char* kMainKeys[] = {"mode",   "masses", "radii",          "states",
                           "b0",     "e0",     "curvature_mode", "axis_permutation",
                           "format", "out"};
const char* kConstantKeys[] = {"G", "c", "hbar", "e_charge", "m_electron", "Z"};

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

template <size_t N>
std::string nearest_key(const std::string& key, const char* const (&keys)[N]) {
  std::string best = keys[0];
  int best_d = edit_distance(key, best);
  for (const char* k : keys) {
    const int d = edit_distance(key, k);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& tok, int line, int col) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, col, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, col, "trailing characters in number '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (out.empty()) out.push_back("");
  return out;
}

StateSpec parse_state(const std::string& entry, int line, int col) {
  std::stringstream ss(entry);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  if (toks.empty() || toks.size() > 3)
    throw ParseError(line, col,
                     "state entry must be 'n', 'n l m_l', 'n l all' or 'n all'");
  StateSpec sp;
  sp.n = static_cast<int>(parse_number(toks[0], line, col));
  if (sp.n < 1) throw ParseError(line, col, "state n must be >= 1");
  if (toks.size() == 1 || toks[1] == "all") {
    sp.all_l = true;
    sp.all_ml = true;
    if (toks.size() == 3)
      throw ParseError(line, col, "'n all' takes no m_l field");
    return sp;
  }
  sp.l = static_cast<int>(parse_number(toks[1], line, col));
  if (toks.size() == 2 || toks[2] == "all") {
    sp.all_ml = true;
    return sp;
  }
  sp.m_l = static_cast<int>(parse_number(toks[2], line, col));
  return sp;
}

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SweepConfig parse_config(const std::string& text) {
  SweepConfig cfg;
  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  std::string section = "sweep";
  bool saw_masses = false, saw_radii = false, saw_states = false;
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(line_no, 1, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "sweep" && section != "constants")
        throw ParseError(line_no, 1, "unknown section '" + section + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, 1, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const int vcol = static_cast<int>(raw.find('=')) + 2;
    if (value.empty())
      throw ParseError(line_no, vcol, "missing value for '" + key + "'");

    if (section == "constants") {
      bool known = false;
      for (const char* k : kConstantKeys) known |= key == k;
      if (!known)
        throw ParseError(line_no, 1,
                         "unknown constant '" + key + "'; nearest is '" +
                             nearest_key(key, kConstantKeys) + "'");
      cfg.constant_overrides[key] = parse_number(value, line_no, vcol);
      continue;
    }

    if (key == "mode") {
      if (value == "bare")
        cfg.mode = SweepMode::bare;
      else if (value == "zeeman")
        cfg.mode = SweepMode::zeeman;
      else if (value == "stark")
        cfg.mode = SweepMode::stark;
      else if (value == "semiclassical")
        cfg.mode = SweepMode::semiclassical;
      else
        throw ParseError(line_no, vcol, "unknown mode '" + value + "'");
    } else if (key == "masses") {
      for (const auto& tok : split(value, ',')) {
        const double m = parse_number(tok, line_no, vcol);
        if (m < 0.0) throw ParseError(line_no, vcol, "mass must be >= 0");
        cfg.masses.push_back(m);
      }
      saw_masses = true;
    } else if (key == "radii") {
      for (const auto& tok : split(value, ',')) {
        const double r = parse_number(tok, line_no, vcol);
        if (r <= 0.0) throw ParseError(line_no, vcol, "radius must be > 0");
        cfg.radii.push_back(r);
      }
      saw_radii = true;
    } else if (key == "states") {
      for (const auto& entry : split(value, ';'))
        cfg.states.push_back(parse_state(entry, line_no, vcol));
      saw_states = true;
    } else if (key == "b0") {
      cfg.b0 = parse_number(value, line_no, vcol);
      if (cfg.b0 < 0.0) throw ParseError(line_no, vcol, "b0 must be >= 0");
    } else if (key == "e0") {
      cfg.e0 = parse_number(value, line_no, vcol);
      if (cfg.e0 < 0.0) throw ParseError(line_no, vcol, "e0 must be >= 0");
    } else if (key == "curvature_mode") {
      if (value == "leading_orthonormal")
        cfg.curvature_mode = CurvatureMode::leading_orthonormal;
      else if (value == "exact_printed")
        cfg.curvature_mode = CurvatureMode::exact_printed;
      else
        throw ParseError(line_no, vcol, "unknown curvature_mode '" + value + "'");
    } else if (key == "axis_permutation") {
      std::stringstream ps(value);
      std::array<int, 3> perm;
      for (int i = 0; i < 3; ++i)
        if (!(ps >> perm[i]))
          throw ParseError(line_no, vcol,
                           "axis_permutation needs three axis numbers");
      cfg.axis_permutation = perm;
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw ParseError(line_no, vcol, "format must be csv or json");
      cfg.format = value;
    } else if (key == "out") {
      cfg.out_path = value;
    } else {
      throw ParseError(line_no, 1, "unknown key '" + key + "'; nearest is '" +
                                       nearest_key(key, kMainKeys) + "'");
    }
  }
  if (!saw_masses) throw ParseError(line_no, 1, "missing required grid 'masses'");
  if (!saw_radii) throw ParseError(line_no, 1, "missing required grid 'radii'");
  if (!saw_states) throw ParseError(line_no, 1, "missing required grid 'states'");
  return cfg;
}

namespace {

std::vector<AtomState> expand_states(const std::vector<StateSpec>& specs) {
  std::vector<AtomState> out;
  for (const auto& sp : specs) {
    const int l_lo = sp.all_l ? 0 : sp.l;
    const int l_hi = sp.all_l ? sp.n - 1 : sp.l;
    for (int l = l_lo; l <= l_hi; ++l) {
      if (l < 0 || l >= sp.n)
        throw Error(ErrorCode::invalid_argument,
                    "state l out of range for n = " + std::to_string(sp.n));
      const int m_lo = sp.all_ml ? -l : sp.m_l;
      const int m_hi = sp.all_ml ? l : sp.m_l;
      for (int m = m_lo; m <= m_hi; ++m) {
        AtomState s{sp.n, l, m};
        validate_state(s);
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AtomState& a, const AtomState& b) {
    return std::tie(a.n, a.l, a.m_l) < std::tie(b.n, b.l, b.m_l);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const AtomState& a, const AtomState& b) {
                          return a.n == b.n && a.l == b.l && a.m_l == b.m_l;
                        }),
            out.end());
  return out;
}

double sandwich(const PerturbationMatrix& pm, const std::vector<double>& v) {
  double sum = 0.0;
  for (int i = 0; i < pm.dim(); ++i)
    for (int j = 0; j < pm.dim(); ++j) sum += v[i] * pm.at(i, j) * v[j];
  return sum;
}

const char* mode_name(SweepMode m) {
  switch (m) {
    case SweepMode::bare: return "bare";
    case SweepMode::zeeman: return "zeeman";
    case SweepMode::stark: return "stark";
    case SweepMode::semiclassical: return "semiclassical";
  }
  return "?";
}

SweepRow make_row(const SweepConfig& cfg, const PhysicalContext& ctx, double M,
                  double r, const AtomState& st) {
  SweepRow row;
  row.mode = mode_name(cfg.mode);
  row.mass = M;
  row.radius = r;
  row.n = st.n;
  row.l = st.l;
  row.m_l = st.m_l;
  const ValidityReport rep = validity_report(ctx, M, r, cfg.b0);
  row.weak_field_param = rep.weak_field_parameter;
  std::string warn;
  for (const auto& w : rep.warnings) {
    if (!warn.empty()) warn += "; ";
    warn += w;
  }
  row.warnings = warn;
  const CurvatureTensor curv =
      schwarzschild_curvature(ctx, M, r, cfg.curvature_mode);
  row.flat_energy = flat_energy(ctx, st.n);

  switch (cfg.mode) {
    case SweepMode::bare: {
      const auto blocks =
          bare_atom_matrix(ctx, curv, st.n, st.l, cfg.axis_permutation);
      std::vector<double> total(blocks[0].entries);
      for (size_t i = 0; i < total.size(); ++i)
        total[i] += blocks[1].entries[i];
      const auto es = eigensystem(total, blocks[0].dim());
      const int k = st.m_l + st.l;
      row.d_mass_quadrupole = sandwich(blocks[0], es.vectors[k]);
      row.d_nuclear_curvature = sandwich(blocks[1], es.vectors[k]);
      break;
    }
    case SweepMode::zeeman: {
      const auto ec = zeeman_correction(ctx, curv, cfg.b0, st,
                                        cfg.axis_permutation, &rep);
      row.d_zeeman_flat = ec.terms.at(TermTag::zeeman_flat);
      row.d_zeeman_curvature = ec.terms.at(TermTag::zeeman_curvature);
      break;
    }
    case SweepMode::stark: {
      const auto blocks =
          stark_matrix(ctx, curv, cfg.e0, st.n, cfg.axis_permutation);
      const int dim = blocks[0].dim();
      std::vector<double> total(dim * dim, 0.0);
      for (const auto& b : blocks)
        for (int i = 0; i < dim * dim; ++i) total[i] += b.entries[i];
      const auto es = eigensystem(total, dim);
      int k = 0;
      for (int i = 0; i < dim; ++i)
        if (blocks[0].basis[i].l == st.l && blocks[0].basis[i].m_l == st.m_l)
          k = i;
      row.d_mass_quadrupole = sandwich(blocks[0], es.vectors[k]);
      row.d_nuclear_curvature = sandwich(blocks[1], es.vectors[k]);
      row.d_stark_flat = sandwich(blocks[2], es.vectors[k]);
      row.d_stark_curvature = sandwich(blocks[3], es.vectors[k]);
      break;
    }
    case SweepMode::semiclassical: {
      const auto res = orbit_radius(ctx, curv, cfg.b0, st.n, std::nullopt,
                                    cfg.axis_permutation);
      row.rho = res.rho;
      row.v = res.v;
      row.r_a = res.r_a;
      row.residual = res.residual;
      break;
    }
  }
  row.total = row.flat_energy + row.d_mass_quadrupole +
              row.d_nuclear_curvature + row.d_zeeman_flat +
              row.d_zeeman_curvature + row.d_stark_flat + row.d_stark_curvature;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep_rows(const SweepConfig& config) {
  if (config.masses.empty() || config.radii.empty() || config.states.empty())
    throw Error(ErrorCode::invalid_argument, "empty sweep grid");
  const PhysicalContext ctx =
      make_context(UnitSystem::gaussian_cgs, config.constant_overrides);
  auto masses = config.masses;
  auto radii = config.radii;
  std::sort(masses.begin(), masses.end());
  std::sort(radii.begin(), radii.end());
  std::vector<AtomState> states = expand_states(config.states);
  if (config.mode == SweepMode::semiclassical) {
    // only n matters; deduplicate
    std::vector<AtomState> ns;
    for (const auto& s : states)
      if (ns.empty() || ns.back().n != s.n) ns.push_back(AtomState{s.n, 0, 0});
    states = ns;
  }
  std::vector<SweepRow> rows;
  for (double M : masses)
    for (double r : radii)
      for (const auto& st : states) {
        try {
          rows.push_back(make_row(config, ctx, M, r, st));
        } catch (const Error& e) {
          throw Error(e.code(),
                      std::string(e.what()) + " [row M=" + fmt17(M) +
                          " r=" + fmt17(r) + " n=" + std::to_string(st.n) +
                          " l=" + std::to_string(st.l) +
                          " m_l=" + std::to_string(st.m_l) + "]");
        }
      }
  return rows;
}

std::string emit_csv(SweepMode mode, const std::vector<SweepRow>& rows) {
  std::string out;
  if (mode == SweepMode::semiclassical) {
    out = "case,M_g,r_cm,n,rho_cm,v_cm_s,r_a_cm,residual,weak_field_param,"
          "warnings\n";
    for (const auto& r : rows)
      out += r.mode + "," + fmt17(r.mass) + "," + fmt17(r.radius) + "," +
             std::to_string(r.n) + "," + fmt17(r.rho) + "," + fmt17(r.v) + "," +
             fmt17(r.r_a) + "," + fmt17(r.residual) + "," +
             fmt17(r.weak_field_param) + "," + r.warnings + "\n";
    return out;
  }
  out = "case,M_g,r_cm,n,l,m_l,E_flat_erg,dE_mass_quadrupole_erg,"
        "dE_nuclear_curvature_erg,dE_zeeman_flat_erg,dE_zeeman_curvature_erg,"
        "dE_stark_flat_erg,dE_stark_curvature_erg,dE_total_erg,"
        "weak_field_param,warnings\n";
  for (const auto& r : rows)
    out += r.mode + "," + fmt17(r.mass) + "," + fmt17(r.radius) + "," +
           std::to_string(r.n) + "," + std::to_string(r.l) + "," +
           std::to_string(r.m_l) + "," + fmt17(r.flat_energy) + "," +
           fmt17(r.d_mass_quadrupole) + "," + fmt17(r.d_nuclear_curvature) +
           "," + fmt17(r.d_zeeman_flat) + "," + fmt17(r.d_zeeman_curvature) +
           "," + fmt17(r.d_stark_flat) + "," + fmt17(r.d_stark_curvature) +
           "," + fmt17(r.total) + "," + fmt17(r.weak_field_param) + "," +
           r.warnings + "\n";
  return out;
}

std::string emit_json(SweepMode mode, const std::vector<SweepRow>& rows) {
  std::string out = "[\n";
  auto esc = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += "  {\"case\": \"" + r.mode + "\", \"M_g\": " + fmt17(r.mass) +
           ", \"r_cm\": " + fmt17(r.radius) + ", \"n\": " + std::to_string(r.n);
    if (mode == SweepMode::semiclassical) {
      out += ", \"rho_cm\": " + fmt17(r.rho) + ", \"v_cm_s\": " + fmt17(r.v) +
             ", \"r_a_cm\": " + (std::isinf(r.r_a) ? std::string("\"inf\"")
                                                   : fmt17(r.r_a)) +
             ", \"residual\": " + fmt17(r.residual);
    } else {
      out += ", \"l\": " + std::to_string(r.l) +
             ", \"m_l\": " + std::to_string(r.m_l) +
             ", \"E_flat_erg\": " + fmt17(r.flat_energy) +
             ", \"dE_mass_quadrupole_erg\": " + fmt17(r.d_mass_quadrupole) +
             ", \"dE_nuclear_curvature_erg\": " + fmt17(r.d_nuclear_curvature) +
             ", \"dE_zeeman_flat_erg\": " + fmt17(r.d_zeeman_flat) +
             ", \"dE_zeeman_curvature_erg\": " + fmt17(r.d_zeeman_curvature) +
             ", \"dE_stark_flat_erg\": " + fmt17(r.d_stark_flat) +
             ", \"dE_stark_curvature_erg\": " + fmt17(r.d_stark_curvature) +
             ", \"dE_total_erg\": " + fmt17(r.total);
    }
    out += ", \"weak_field_param\": " + fmt17(r.weak_field_param) +
           ", \"warnings\": \"" + esc(r.warnings) + "\"}";
    out += (i + 1 < rows.size()) ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

int run_sweep(const SweepConfig& config, std::ostream& err) {
  SweepConfig cfg = config;
  if (const char* env = std::getenv("GRATOM_OUT"); env && *env)
    cfg.out_path = env;
  std::vector<SweepRow> rows;
  try {
    rows = run_sweep_rows(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = cfg.format == "json" ? emit_json(cfg.mode, rows)
                                                : emit_csv(cfg.mode, rows);
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << cfg.out_path << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace gratom
