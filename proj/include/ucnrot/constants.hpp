#pragma once

// Physical constants, constant profiles and the reduced scales of the
// gravitational bouncer. Everything is SI; peV appears only at the
// presentation boundary through joules_to_peV / peV_to_joules.

#include <istream>
#include <map>
#include <string>
#include <string_view>

namespace ucnrot {

/// 1 peV in joules (exact, from the SI definition of the elementary charge).
inline constexpr double kJoulesPerPeV = 1.602176634e-31;

struct PhysicalConstants {
  double hbar;          // J s
  double m_neutron;     // kg
  double c;             // m/s
  double g;             // m/s^2
  double omega_earth;   // rad/s
  double earth_radius;  // m
};

/// Natural length and energy of the bouncer: z = l * xi, E = e * lambda.
struct ReducedScales {
  double l;  // m
  double e;  // J
};

enum class Profile {
  codata,  // CODATA 2018 hbar and m_n, standard gravity, sidereal Earth rate
  paper,   // rounded estimate values: g = 10, omega = 7.27e-5, cos(alpha) = 0.71
};

std::string_view profile_name(Profile p);
Profile parse_profile(std::string_view name);

PhysicalConstants default_constants(Profile p = Profile::codata);

/// Default cos(latitude) of the laboratory for a profile.
double default_cos_alpha(Profile p = Profile::codata);

/// Throws std::invalid_argument unless every field is finite and positive.
/// omega_earth may be zero (a non-rotating reference case).
void validate(const PhysicalConstants& k);

ReducedScales reduced_scales(const PhysicalConstants& k);

constexpr double joules_to_peV(double joules) { return joules / kJoulesPerPeV; }
constexpr double peV_to_joules(double peV) { return peV * kJoulesPerPeV; }

/// A fully resolved constant set plus the lab latitude, as used by one run.
struct ProfileSettings {
  Profile profile = Profile::codata;
  PhysicalConstants constants = default_constants(Profile::codata);
  double cos_alpha = default_cos_alpha(Profile::codata);
};

ProfileSettings load_profile(Profile p);

/// Parses `key = value` lines (SI units). Blank lines and `#` comments are
/// skipped. Recognised keys are the PhysicalConstants field names plus
/// `cos_alpha`; anything else throws std::invalid_argument naming the line.
std::map<std::string, double> parse_constants_overrides(std::istream& in);
std::map<std::string, double> read_constants_file(const std::string& path);

/// Applies parsed overrides and re-validates the result.
void apply_overrides(ProfileSettings& settings,
                     const std::map<std::string, double>& overrides);

}  // namespace ucnrot
