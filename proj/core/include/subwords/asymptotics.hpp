#pragma once

#include <string>
#include <vector>

#include "subwords/summatory.hpp"
#include "subwords/words.hpp"

namespace subwords {

/// Documented relative error budget of the floating part of phi. The integer
/// numerator is exact; only the final division and the real power
/// (2b-1)^(log_b e) are evaluated in 80-bit extended precision.
inline constexpr long double kPhiErrorBudget = 1e-12L;

/// e_n(alpha) = b^(n+1) + b * floor(b^n * alpha) + 1.
Int phi_argument(Base base, int n, long double alpha);

struct PhiSample {
  long double alpha;
  int n;
  Int argument;       // e_n(alpha), exact
  Int numerator;      // A_b(e_n(alpha)), exact
  long double value;  // numerator / (2b-1)^(log_b argument)
};

/// phi_n(alpha) = A_b(e_n(alpha)) / (2b-1)^(log_b e_n(alpha)).
/// alpha ranges over [0, b-1): one full period of leading-digit patterns
/// (for b = 2 this is the unit interval). Out-of-range alpha throws.
/// A shared evaluator may be passed to reuse the summatory memo.
PhiSample phi(Base base, int n, long double alpha, SummatoryEvaluator* shared = nullptr);

struct HPoint {
  double x;
  double value;
};

/// One period of the limit fluctuation, estimated at level n: for
/// k = 0..resolution-1, x_k = k / resolution and the estimate is
/// phi(b, n, b^(x_k) - 1).
std::vector<HPoint> sample_h(Base base, int n, int resolution);

/// CSV with header "x,value", 15 significant digits.
std::string sample_h_csv(const std::vector<HPoint>& series);

struct ScalingReport {
  bool exact_ok = true;            // A(b^j m) = (2b-1)^j A(m), exact integers
  Int first_failure_m = -1;
  int first_failure_j = -1;
  long double max_float_deviation = 0.0L;  // spread of the normalized ratios
};

/// Draws `samples` pseudo-random (k, r) pairs (deterministic seed), forms
/// m = b^k + r and checks both the exact scaling identity and the floating
/// invariance of A(b^j m) / (2b-1)^(log_b (b^j m)) across j = 0..5.
ScalingReport scaling_identity_check(Base base, int samples, std::uint64_t seed = 0x5eed);

}  // namespace subwords
