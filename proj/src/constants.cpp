#include "ucnrot/constants.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace ucnrot {

namespace {

constexpr double kHbar = 1.054571817e-34;        // CODATA 2018
constexpr double kNeutronMass = 1.67492749804e-27;  // CODATA 2018
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kStandardGravity = 9.80665;
constexpr double kSiderealRate = 7.2921150e-5;  // IERS nominal
constexpr double kMeanEarthRadius = 6.371e6;

// Laboratory at the latitude of the ILL, Grenoble (45.2 deg N).
constexpr double kGrenobleLatitudeDeg = 45.2;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double* field_for(ProfileSettings& s, const std::string& key) {
  auto& k = s.constants;
  if (key == "hbar") return &k.hbar;
  if (key == "m_neutron") return &k.m_neutron;
  if (key == "c") return &k.c;
  if (key == "g") return &k.g;
  if (key == "omega_earth") return &k.omega_earth;
  if (key == "earth_radius") return &k.earth_radius;
  if (key == "cos_alpha") return &s.cos_alpha;
  return nullptr;
}

}  // namespace

std::string_view profile_name(Profile p) {
  return p == Profile::paper ? "paper" : "codata";
}

Profile parse_profile(std::string_view name) {
  if (name == "codata") return Profile::codata;
  if (name == "paper") return Profile::paper;
  throw std::invalid_argument("unknown profile '" + std::string(name) +
                              "' (expected codata or paper)");
}

PhysicalConstants default_constants(Profile p) {
  PhysicalConstants k{kHbar,      kNeutronMass,   kSpeedOfLight,
                      kStandardGravity, kSiderealRate, kMeanEarthRadius};
  if (p == Profile::paper) {
    k.g = 10.0;
    k.omega_earth = 7.27e-5;
  }
  return k;
}

double default_cos_alpha(Profile p) {
  if (p == Profile::paper) return 0.71;
  return std::cos(kGrenobleLatitudeDeg * std::numbers::pi / 180.0);
}

void validate(const PhysicalConstants& k) {
  auto require = [](double v, const char* name, bool allow_zero) {
    if (!std::isfinite(v) || v < 0.0 || (!allow_zero && v == 0.0)) {
      throw std::invalid_argument(std::string("constant '") + name +
                                  "' must be finite and positive");
    }
  };
  require(k.hbar, "hbar", false);
  require(k.m_neutron, "m_neutron", false);
  require(k.c, "c", false);
  require(k.g, "g", false);
  require(k.omega_earth, "omega_earth", true);
  require(k.earth_radius, "earth_radius", false);
}

ReducedScales reduced_scales(const PhysicalConstants& k) {
  validate(k);
  const double hbar2 = k.hbar * k.hbar;
  const double l = std::cbrt(hbar2 / (2.0 * k.m_neutron * k.m_neutron * k.g));
  const double e = std::cbrt(hbar2 * k.m_neutron * k.g * k.g / 2.0);
  return {l, e};
}

ProfileSettings load_profile(Profile p) {
  return {p, default_constants(p), default_cos_alpha(p)};
}

std::map<std::string, double> parse_constants_overrides(std::istream& in) {
  std::map<std::string, double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const auto where = "constants line " + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + "expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string text = trim(std::string_view(body).substr(eq + 1));
    ProfileSettings scratch;
    if (field_for(scratch, key) == nullptr) {
      throw std::invalid_argument(where + "unknown key '" + key + "'");
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || errno != 0 || *end != '\0' || !std::isfinite(value)) {
      throw std::invalid_argument(where + "bad number '" + text + "'");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, double> read_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open constants file '" + path + "'");
  return parse_constants_overrides(in);
}

void apply_overrides(ProfileSettings& settings,
                     const std::map<std::string, double>& overrides) {
  for (const auto& [key, value] : overrides) {
    double* slot = field_for(settings, key);
    if (slot == nullptr) throw std::invalid_argument("unknown key '" + key + "'");
    *slot = value;
  }
  validate(settings.constants);
  if (!(settings.cos_alpha >= 0.0 && settings.cos_alpha <= 1.0)) {
    throw std::invalid_argument("cos_alpha must lie in [0, 1]");
  }
}

}  // namespace ucnrot
