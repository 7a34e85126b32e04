#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "ucnrot/budget.hpp"
#include "ucnrot/constants.hpp"
#include "ucnrot/error.hpp"
#include "ucnrot/rotation.hpp"
#include "ucnrot/spectrum.hpp"
#include "ucnrot/validation.hpp"
#include "ucnrot/wkb.hpp"

namespace ucnrot::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, long, double, std::string>;

enum class Format { csv, json, table };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

json cell_json(const Cell& c) {
  struct {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(long v) const { return v; }
    json operator()(double v) const { return std::isfinite(v) ? json(v) : json(nullptr); }
    json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Settings {
  std::string profile = "codata";
  std::string constants_file;
  std::string format = "csv";
  bool no_header = false;
  std::optional<double> g;
};

json constants_json(const ProfileSettings& p) {
  const auto& k = p.constants;
  return json{{"hbar", k.hbar},       {"m_neutron", k.m_neutron},
              {"c", k.c},             {"g", k.g},
              {"omega_earth", k.omega_earth}, {"earth_radius", k.earth_radius},
              {"cos_alpha", p.cos_alpha}};
}

void emit(const Table& t, const std::string& subcommand, const ProfileSettings& p,
          json meta, Format format, bool header, std::ostream& out) {
  if (format == Format::json) {
    json doc;
    json m{{"subcommand", subcommand},
           {"profile", std::string(profile_name(p.profile))},
           {"constants", constants_json(p)}};
    for (auto& [key, value] : meta.items()) m[key] = value;
    doc["meta"] = m;
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row;
      for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = cell_json(r[i]);
      rows.push_back(row);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
    return;
  }

  if (format == Format::csv) {
    if (header) {
      out << "# ucnrot " << subcommand << " profile=" << profile_name(p.profile);
      const json constants = constants_json(p);
      for (auto& [key, value] : constants.items()) {
        out << " " << key << "=" << format_double(value.get<double>());
      }
      for (auto& [key, value] : meta.items()) {
        out << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
      }
      out << "\n";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
      out << "\n";
    }
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(r[i]));
      out << "\n";
    }
    return;
  }

  std::vector<std::size_t> width(t.columns.size(), 0);
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < r.size(); ++i) {
      line.push_back(r[i].index() == 0 ? "-" : cell_text(r[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  if (header) {
    out << "profile: " << profile_name(p.profile) << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << t.columns[i];
    }
    out << "\n";
  }
  for (const auto& line : text) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
    }
    out << "\n";
  }
}

ProfileSettings resolve(const Settings& s, std::optional<double> cos_alpha) {
  ProfileSettings p = load_profile(parse_profile(s.profile));
  std::map<std::string, double> overrides;
  if (!s.constants_file.empty()) overrides = read_constants_file(s.constants_file);
  if (s.g) overrides["g"] = *s.g;
  if (cos_alpha) overrides["cos_alpha"] = *cos_alpha;
  apply_overrides(p, overrides);
  return p;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "table") return Format::table;
  return Format::csv;
}

Table spectrum_table(const ProfileSettings& p, long n_max) {
  const auto scales = reduced_scales(p.constants);
  Table t{{"n", "lambda", "E_peV", "H_um", "z_avg_um", "dE_spacing_peV"}, {}};
  double previous_E = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const auto lv = level(n, scales, p.constants);
    Cell spacing;
    if (n >= 2) spacing = joules_to_peV(lv.E - previous_E);
    t.rows.push_back({n, lv.lambda, joules_to_peV(lv.E), lv.H * 1e6, lv.z_avg * 1e6, spacing});
    previous_E = lv.E;
  }
  return t;
}

Table crossover_table(const WkbFit& fit) {
  Table t{{"A_peV", "B_peV", "x_star", "n_star", "E_star_peV", "H_star_mm"}, {}};
  if (const auto c = crossover(fit)) {
    t.rows.push_back({joules_to_peV(fit.A), joules_to_peV(fit.B), c->x_star, c->n_star,
                      joules_to_peV(c->E_star), c->H_star * 1e3});
  } else {
    t.rows.push_back({joules_to_peV(fit.A), joules_to_peV(fit.B), {}, {}, {}, {}});
  }
  return t;
}

std::string kind_name(Tolerance k) {
  switch (k) {
    case Tolerance::relative: return "relative";
    case Tolerance::absolute: return "absolute";
    case Tolerance::at_most: return "at_most";
    case Tolerance::info: return "info";
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gravitational UCN levels and the Earth-rotation shift", "ucnrot"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings s;
  app.add_option("--profile", s.profile, "Constant profile")
      ->check(CLI::IsMember({"codata", "paper"}));
  app.add_option("--constants-file", s.constants_file, "key = value overrides (SI units)");
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_flag("--no-header", s.no_header, "Suppress the provenance line and column header");
  app.add_option("--g", s.g, "Override gravity acceleration (m/s^2)")
      ->check(CLI::PositiveNumber);

  long n_max = 10;
  double u1 = 10.0;
  std::optional<double> cos_alpha;
  bool paper_anchors = false;
  long budget_n = 1;
  double slit_mm = 12.0;
  double u1_min = -10.0;
  double u1_max = 10.0;

  auto* spectrum = app.add_subcommand("spectrum", "Bouncer levels E_n, H_n, <z>_n");
  spectrum->add_option("--n-max", n_max, "Highest level")->check(CLI::PositiveNumber);

  auto* shift = app.add_subcommand("shift", "First-order rotation shift per level");
  shift->add_option("--u1", u1, "West->East velocity (m/s)");
  shift->add_option("--cos-alpha", cos_alpha, "cos(latitude)")->check(CLI::Range(0.0, 1.0));
  shift->add_option("--n-max", n_max, "Highest level")->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("crossover", "Level where the shift equals the spacing");
  auto* anchors_flag =
      cross->add_flag("--paper-anchors", paper_anchors, "Use the quoted E_6, E_7, H_7 anchors");
  cross->add_option("--u1", u1, "West->East velocity (m/s)")->excludes(anchors_flag);
  cross->add_option("--cos-alpha", cos_alpha, "cos(latitude)")
      ->check(CLI::Range(0.0, 1.0))
      ->excludes(anchors_flag);

  auto* cont = app.add_subcommand("continuum", "Levels smeared into a continuum in a slit");
  auto* cont_anchors =
      cont->add_flag("--paper-anchors", paper_anchors, "Use the quoted E_6, E_7, H_7 anchors");
  cont->add_option("--slit-mm", slit_mm, "Slit height (mm)")->check(CLI::PositiveNumber);
  cont->add_option("--u1-min", u1_min, "Lowest West->East velocity (m/s)");
  cont->add_option("--u1-max", u1_max, "Highest West->East velocity (m/s)");
  cont->add_option("--cos-alpha", cos_alpha, "cos(latitude)")
      ->check(CLI::Range(0.0, 1.0))
      ->excludes(cont_anchors);

  auto* bud = app.add_subcommand("budget", "Magnitude of each Hamiltonian term");
  bud->add_option("--n", budget_n, "Level")->check(CLI::PositiveNumber);
  bud->add_option("--u1", u1, "West->East velocity (m/s)");
  bud->add_option("--cos-alpha", cos_alpha, "cos(latitude)")->check(CLI::Range(0.0, 1.0));

  auto* val = app.add_subcommand("validate", "Run every oracle cross-check");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ProfileSettings p;
  try {
    p = resolve(s, cos_alpha);
    if (*cont && !(u1_min <= u1_max)) throw std::invalid_argument("--u1-min exceeds --u1-max");
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Format format = parse_format(s.format);
  const bool header = !s.no_header;
  const auto& k = p.constants;

  try {
    if (*spectrum) {
      emit(spectrum_table(p, n_max), "spectrum", p, json::object(), format, header, out);
    } else if (*shift) {
      const auto scales = reduced_scales(k);
      const auto frame = make_lab_frame(p.cos_alpha, k);
      Table t{{"n", "E_peV", "dE_rot_peV", "relative"}, {}};
      double offset = 0.0;
      for (long n = 1; n <= n_max; ++n) {
        const auto lv = level(n, scales, k);
        const auto r = rotation_shift(lv, u1, frame, k);
        offset = r.state_independent_offset;
        t.rows.push_back({n, joules_to_peV(lv.E), joules_to_peV(r.dE), r.relative});
      }
      json meta{{"u1", u1},
                {"state_independent_offset_peV", joules_to_peV(offset)},
                {"y_moment_term_peV", 0.0}};
      emit(t, "shift", p, meta, format, header, out);
    } else if (*cross || *cont) {
      WkbFit fit;
      json meta;
      if (paper_anchors) {
        fit = anchor_fit();
        meta = json{{"mode", "paper-anchors"},
                    {"A_fitted_peV", joules_to_peV(fit.A_fitted)},
                    {"B_fitted_peV", joules_to_peV(fit.B_fitted)}};
      } else {
        fit = spectrum_fit(reduced_scales(k), k, make_lab_frame(p.cos_alpha, k),
                           *cross ? u1 : 10.0);
        meta = json{{"mode", "spectrum"}, {"u1", fit.u1}};
      }
      if (*cross) {
        emit(crossover_table(fit), "crossover", p, meta, format, header, out);
      } else {
        const auto r = continuum_report(fit, u1_min, u1_max, slit_mm * 1e-3);
        Table t{{"slit_mm", "u1_min", "u1_max", "top_level", "smear_onset", "first_flagged",
                 "last_flagged", "flagged_count", "at_or_above_crossover"},
                {}};
        Cell onset;
        if (r.smear_onset) onset = *r.smear_onset;
        Cell first, last;
        if (r.flagged_count > 0) {
          first = r.first_flagged;
          last = r.last_flagged;
        }
        t.rows.push_back({slit_mm, u1_min, u1_max, r.top_level, onset, first, last,
                          r.flagged_count,
                          std::string(r.at_or_above_crossover ? "true" : "false")});
        emit(t, "continuum", p, meta, format, header, out);
      }
    } else if (*bud) {
      const auto scales = reduced_scales(k);
      const auto frame = make_lab_frame(p.cos_alpha, k);
      const auto lv = level(budget_n, scales, k);
      const auto b = budget(lv, ansatz_from_velocity(lv, u1, 0.0, k), frame, k);
      Table t{{"term", "value_J", "ratio_to_E1", "correction", "flagged"}, {}};
      for (const auto& r : negligibility_report(b)) {
        t.rows.push_back({r.term, r.value, r.ratio_to_ground,
                          std::string(r.correction ? "true" : "false"),
                          std::string(r.flagged ? "true" : "false")});
      }
      json meta{{"n", budget_n},
                {"u1", u1},
                {"spin_convention", std::string(kSpinConventionNote)},
                {"relativistic_bound_source", std::string(kRelativisticGravityBoundSource)}};
      emit(t, "budget", p, meta, format, header, out);
    } else if (*val) {
      Table t{{"id", "check", "measurement", "measured", "target", "tolerance", "kind", "status"},
              {}};
      bool ok = true;
      auto criteria = acceptance_criteria();
      for (auto& c : oracle_criteria()) criteria.push_back(std::move(c));
      for (const auto& c : criteria) {
        ok = ok && c.passed();
        for (const auto& m : c.measurements) {
          t.rows.push_back({c.id, c.title, m.name, m.measured, m.target, m.tol,
                            kind_name(m.kind), std::string(m.passed ? "PASS" : "FAIL")});
        }
        if (!c.error.empty()) {
          t.rows.push_back({c.id, c.title, "error: " + c.error, {}, {}, {}, {}, "FAIL"});
        }
        if (c.runtime_limit > 0.0) {
          const bool in_time = c.seconds <= c.runtime_limit;
          t.rows.push_back({c.id, c.title, std::string("runtime within limit"), {}, {},
                            c.runtime_limit, std::string("at_most"),
                            std::string(in_time ? "PASS" : "FAIL")});
        }
      }
      emit(t, "validate", p, json::object(), format, header, out);
      return ok ? kExitOk : kExitNumeric;
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace ucnrot::cli
