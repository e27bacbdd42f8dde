#include "subwords/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace subwords {

namespace {

long double to_long_double(const Int& v) { return v.convert_to<long double>(); }

long double normalized_ratio(Base base, const Int& argument, const Int& numerator) {
  const long double b = static_cast<long double>(base.value());
  const long double unit = static_cast<long double>(2 * base.value() - 1);
  const long double log_b_arg = logl(to_long_double(argument)) / logl(b);
  return to_long_double(numerator) * expl(-log_b_arg * logl(unit));
}

}  // namespace

Int phi_argument(Base base, int n, long double alpha) {
  if (n < 1) throw std::domain_error("phi expects n >= 1");
  const int b = base.value();
  if (!(alpha >= 0.0L) || alpha >= static_cast<long double>(b - 1)) {
    throw std::domain_error("alpha out of [0, b-1)");
  }
  // floor(b^n * alpha) must be exact; keep b^n within the 64-bit mantissa.
  if (n * std::log2(static_cast<double>(b)) > 62.0) {
    throw std::domain_error("level n too large for exact sampling");
  }
  const long double scaled = powl(static_cast<long double>(b), n) * alpha;
  const Int floor_part(static_cast<long long>(floorl(scaled)));
  return int_pow(Int(b), static_cast<unsigned>(n) + 1) + b * floor_part + 1;
}

PhiSample phi(Base base, int n, long double alpha, SummatoryEvaluator* shared) {
  const Int argument = phi_argument(base, n, alpha);
  Int numerator;
  if (shared != nullptr) {
    numerator = shared->value(argument);
  } else {
    numerator = a_fast(base, argument);
  }
  PhiSample sample{alpha, n, argument, numerator, 0.0L};
  sample.value = normalized_ratio(base, argument, numerator);
  return sample;
}

std::vector<HPoint> sample_h(Base base, int n, int resolution) {
  if (resolution < 2) throw std::domain_error("resolution must be at least 2");
  SummatoryEvaluator evaluator(base);
  std::vector<HPoint> series;
  series.reserve(static_cast<std::size_t>(resolution));
  const long double b = static_cast<long double>(base.value());
  for (int k = 0; k < resolution; ++k) {
    const long double x = static_cast<long double>(k) / resolution;
    const long double alpha = powl(b, x) - 1.0L;
    const PhiSample sample = phi(base, n, alpha, &evaluator);
    series.push_back(HPoint{static_cast<double>(x), static_cast<double>(sample.value)});
  }
  return series;
}

std::string sample_h_csv(const std::vector<HPoint>& series) {
  std::string out = "x,value\n";
  char buffer[96];
  for (const HPoint& p : series) {
    std::snprintf(buffer, sizeof buffer, "%.15g,%.15g\n", p.x, p.value);
    out += buffer;
  }
  return out;
}

ScalingReport scaling_identity_check(Base base, int samples, std::uint64_t seed) {
  const int b = base.value();
  const Int unit(2 * b - 1);
  SummatoryEvaluator evaluator(base);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(1, 10);
  ScalingReport report;

  for (int i = 0; i < samples; ++i) {
    const int k = k_dist(rng);
    const Int block = int_pow(Int(b), static_cast<unsigned>(k));
    std::uniform_int_distribution<long long> r_dist(
        0, block.convert_to<long long>() - 1);
    const Int m = block + r_dist(rng);
    const Int base_value = evaluator.value(m);

    long double reference = 0.0L;
    for (int j = 0; j <= 5; ++j) {
      const Int scaled_arg = m * int_pow(Int(b), static_cast<unsigned>(j));
      const Int scaled_value = evaluator.value(scaled_arg);
      if (scaled_value != int_pow(unit, static_cast<unsigned>(j)) * base_value) {
        report.exact_ok = false;
        if (report.first_failure_j < 0) {
          report.first_failure_m = m;
          report.first_failure_j = j;
        }
      }
      const long double ratio = normalized_ratio(base, scaled_arg, scaled_value);
      if (j == 0) {
        reference = ratio;
      } else {
        const long double deviation = fabsl(ratio - reference);
        if (deviation > report.max_float_deviation) report.max_float_deviation = deviation;
      }
    }
  }
  return report;
}

}  // namespace subwords
