#include "ucnrot/airy.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ucnrot/error.hpp"

namespace ucnrot {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Ai(0) = 3^(-2/3) / Gamma(2/3), Ai'(0) = -3^(-1/3) / Gamma(1/3).
constexpr double kAiAtZero = 0.35502805388781723926;
constexpr double kAiPrimeAtZero = -0.25881940379280679841;

constexpr double kNodeSpacing = 0.5;
constexpr int kNodeCount = 37;  // -9, -8.5, ..., 9
constexpr int kZeroNode = 18;
constexpr int kMaxTaylorTerms = 120;

constexpr int kAsymptoticTerms = 64;

// u_k of the Airy asymptotic expansions; v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticCoefficients {
  std::array<double, kAsymptoticTerms> u{};
  std::array<double, kAsymptoticTerms> v{};
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c = [] {
    AsymptoticCoefficients out;
    out.u[0] = 1.0;
    out.v[0] = 1.0;
    for (int k = 1; k < kAsymptoticTerms; ++k) {
      out.u[k] = out.u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                 ((2.0 * k - 1.0) * 216.0 * k);
      out.v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * out.u[k];
    }
    return out;
  }();
  return c;
}

// Sum of sign^k c_{first + stride k} zeta^{-(first + stride k)}, stopped at
// machine precision or at the smallest term of the divergent tail.
template <typename Coeffs>
double asymptotic_sum(const Coeffs& c, double zeta, int first, int stride,
                      double sign) {
  const double inv = 1.0 / zeta;
  double power = std::pow(inv, first);
  const double step = std::pow(inv, stride);
  double alternating = 1.0;
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = first; k < kAsymptoticTerms; k += stride) {
    const double term = alternating * c[k] * power;
    if (std::abs(term) > previous) break;
    sum += term;
    if (std::abs(term) <= kEps * 0.25 * std::abs(sum)) break;
    previous = std::abs(term);
    power *= step;
    alternating *= sign;
  }
  return sum;
}

AiryPair asymptotic_positive(double x) {
  const auto& c = coefficients();
  const double root = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * root;
  const double quarter = std::sqrt(root);
  const double decay = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
  const double su = asymptotic_sum(c.u, zeta, 0, 1, -1.0);
  const double sv = asymptotic_sum(c.v, zeta, 0, 1, -1.0);
  return {decay * su / quarter, -decay * quarter * sv};
}

AiryPair asymptotic_negative(double x) {
  const auto& c = coefficients();
  const double y = -x;
  const double root = std::sqrt(y);
  const double quarter = std::sqrt(root);
  // zeta = (2/3) y^(3/2) carried as zeta + zeta_lo: for large y the phase
  // needs more than one rounding's worth of accuracy.
  const double root_lo = std::fma(-root, root, y) / (2.0 * root);
  const double cube = y * root;
  const double cube_lo = std::fma(y, root, -cube) + y * root_lo;
  constexpr double two_thirds = 2.0 / 3.0;
  constexpr double two_thirds_lo = 3.700743415417188e-17;  // 2/3 - two_thirds
  const double zeta = two_thirds * cube;
  const double zeta_lo = std::fma(two_thirds, cube, -zeta) + two_thirds * cube_lo +
                         two_thirds_lo * cube;
  const double pu = asymptotic_sum(c.u, zeta, 0, 2, -1.0);
  const double qu = asymptotic_sum(c.u, zeta, 1, 2, -1.0);
  const double pv = asymptotic_sum(c.v, zeta, 0, 2, -1.0);
  const double qv = asymptotic_sum(c.v, zeta, 1, 2, -1.0);
  // cos/sin(zeta - pi/4) without forming the shifted argument.
  const double c0 = std::cos(zeta);
  const double s0 = std::sin(zeta);
  const double cz = c0 - s0 * zeta_lo;
  const double sz = s0 + c0 * zeta_lo;
  const double cos_phase = (cz + sz) * std::numbers::sqrt2 * 0.5;
  const double sin_phase = (sz - cz) * std::numbers::sqrt2 * 0.5;
  const double norm = 1.0 / std::sqrt(kPi);
  return {norm / quarter * (cos_phase * pu + sin_phase * qu),
          norm * quarter * (sin_phase * pv - cos_phase * qv)};
}

// Taylor series of the solution of y'' = x y about x0, evaluated at x0 + t.
AiryPair taylor(double x0, AiryPair y0, double t) {
  double prev = 0.0;  // c_{k-1}
  double ck = y0.ai;
  double ck1 = y0.ai_prime;
  double value = ck + ck1 * t;
  double deriv = ck1;
  double t_pow = t;  // t^(k+1)
  int quiet = 0;
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    const double ck2 = (x0 * ck + prev) / ((k + 2.0) * (k + 1.0));
    const double dv = ck2 * t_pow * t;
    const double dd = (k + 2.0) * ck2 * t_pow;
    value += dv;
    deriv += dd;
    t_pow *= t;
    const bool small = std::abs(dv) <= kEps * 0.25 * std::abs(value) &&
                       std::abs(dd) <= kEps * 0.25 * std::abs(deriv);
    quiet = small ? quiet + 1 : 0;
    if (quiet == 3) break;
    prev = ck;
    ck = ck1;
    ck1 = ck2;
  }
  return {value, deriv};
}

double node_x(int i) { return -kAiryAsymptoticSwitch + kNodeSpacing * i; }

AiryPair step_node(int from, int to, AiryPair y) {
  // Two quarter steps keep every series well inside its fast-converging range.
  const double h = (node_x(to) - node_x(from)) / 2.0;
  const AiryPair mid = taylor(node_x(from), y, h);
  return taylor(node_x(from) + h, mid, h);
}

const std::array<AiryPair, kNodeCount>& nodes() {
  static const std::array<AiryPair, kNodeCount> table = [] {
    std::array<AiryPair, kNodeCount> t{};
    t[kZeroNode] = {kAiAtZero, kAiPrimeAtZero};
    for (int i = kZeroNode - 1; i >= 0; --i) t[i] = step_node(i + 1, i, t[i + 1]);
    // Ai is recessive for x > 0, so integrate leftwards from the asymptotic end.
    t[kNodeCount - 1] = asymptotic_positive(kAiryAsymptoticSwitch);
    for (int i = kNodeCount - 2; i > kZeroNode; --i) t[i] = step_node(i + 1, i, t[i + 1]);
    return t;
  }();
  return table;
}

// Walks to the representable neighbour with the smallest |Ai(-lambda)|.
double polish(double lambda) {
  double best_residual = std::abs(airy_ai(-lambda));
  for (int walk = 0; walk < 16; ++walk) {
    bool moved = false;
    for (double candidate : {std::nextafter(lambda, 0.0), std::nextafter(lambda, 2.0 * lambda)}) {
      const double r = std::abs(airy_ai(-candidate));
      if (r < best_residual) {
        lambda = candidate;
        best_residual = r;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return lambda;
}

}  // namespace

AiryPair airy(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("airy: argument must be finite");
  if (x >= kAiryAsymptoticSwitch) return asymptotic_positive(x);
  if (x <= -kAiryAsymptoticSwitch) return asymptotic_negative(x);
  const int i = static_cast<int>(std::lround((x + kAiryAsymptoticSwitch) / kNodeSpacing));
  return taylor(node_x(i), nodes()[i], x - node_x(i));
}

double airy_ai(double x) { return airy(x).ai; }

double airy_ai_prime(double x) { return airy(x).ai_prime; }

double airy_zero_seed(long n) {
  if (n < 1) throw std::invalid_argument("airy_zero: index must be >= 1");
  const double t = 3.0 * kPi * (4.0 * static_cast<double>(n) - 1.0) / 8.0;
  const double s = 1.0 / (t * t);
  // DLMF 9.9.18 coefficients of T(t).
  static constexpr std::array<double, 6> c = {
      1.0, 5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0, -108056875.0 / 6967296.0,
      162375596875.0 / 334430208.0};
  double sum = 0.0;
  double power = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (double ck : c) {
    const double term = ck * power;
    if (std::abs(term) >= previous) break;
    sum += term;
    previous = std::abs(term);
    power *= s;
  }
  return std::cbrt(t * t) * sum;
}

AiryZero airy_zero(long n) {
  const double seed = airy_zero_seed(n);
  const double t = 3.0 * kPi * (4.0 * static_cast<double>(n) - 1.0) / 8.0;
  const double spacing = kPi / std::cbrt(t);

  // f(lambda) = Ai(-lambda), f'(lambda) = -Ai'(-lambda).
  double lo = seed - 0.5 * spacing;
  double hi = seed + 0.5 * spacing;
  const double f_lo = airy_ai(-lo);
  const double f_hi = airy_ai(-hi);
  if (f_lo == 0.0) return {n, lo};
  if (f_hi == 0.0) return {n, hi};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw NumericalError("airy_zero: no sign change around seed for n = " +
                         std::to_string(n));
  }
  const bool lo_positive = f_lo > 0.0;

  double lambda = seed;
  for (int iter = 0; iter < 200; ++iter) {
    const AiryPair a = airy(-lambda);
    const double f = a.ai;
    if (f == 0.0) return {n, lambda};
    if ((f > 0.0) == lo_positive) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    double next = lambda + f / a.ai_prime;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - lambda);
    lambda = next;
    if (step <= 2.0 * kEps * lambda || hi - lo <= 4.0 * kEps * lambda) {
      return {n, polish(lambda)};
    }
  }
  throw NumericalError("airy_zero: Newton iteration did not converge for n = " +
                       std::to_string(n));
}

}  // namespace ucnrot
