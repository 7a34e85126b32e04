#pragma once

// Real-axis Airy function Ai, its derivative, and the zeros of Ai.
//
// Evaluation uses two regimes. For |x| >= kAiryAsymptoticSwitch the standard
// asymptotic expansions are summed (exponential form for x > 0, modulus/phase
// form for x < 0). Inside the band, Ai is continued by exact Taylor series of
// Ai'' = x Ai about tabulated nodes spaced 0.5 apart; the node table is seeded
// from the Maclaurin values at 0 (negative side) and from the asymptotic
// values at +9 (positive side, integrated in the stable direction).

namespace ucnrot {

inline constexpr double kAiryAsymptoticSwitch = 9.0;

struct AiryPair {
  double ai;
  double ai_prime;
};

/// Ai(x) and Ai'(x) together. Throws std::invalid_argument for non-finite x.
AiryPair airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

/// n-th zero of Ai expressed as lambda_n = -a_n > 0.
struct AiryZero {
  long n;
  double lambda;
};

/// Asymptotic seed for lambda_n from t = 3 pi (4n - 1) / 8.
double airy_zero_seed(long n);

/// lambda_n refined by Newton's method on Ai, safeguarded by bisection inside
/// [seed - s/2, seed + s/2] with s the asymptotic zero spacing. Throws
/// std::invalid_argument for n < 1 and ucnrot::NumericalError when the
/// bracket or the iteration fails.
AiryZero airy_zero(long n);

}  // namespace ucnrot
