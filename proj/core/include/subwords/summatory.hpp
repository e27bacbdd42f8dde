#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subwords/words.hpp"

namespace subwords {

/// Upper bound on summand evaluations accepted by a_oracle; the oracle path
/// exists for testing, a_fast is the scalable route.
inline constexpr std::uint64_t kSummatoryOracleBudget = 10'000'000;

/// A_b(n) = sum of S_b(j) for j < n, evaluated term by term.
/// Throws std::domain_error when n exceeds the oracle budget.
Int a_oracle(Base base, const Int& n);

/// A_b(x b^l) = (2x-1) (2b-1)^l for a digit 1 <= x <= b-1.
Int a_closed_form_pure(Base base, int x, int ell);

/// A_b(x b^l + y b^(l-1)) for digits 1 <= x, y <= b-1 and l >= 1:
///   (4xb - 2x + 4y - 2b)     * (2b-1)^(l-1)   if y <= x
///   (4xb - 2x + 4y - 2b - 1) * (2b-1)^(l-1)   if y > x
Int a_closed_form_mixed(Base base, int x, int y, int ell);

/// A_b(n) by the digit-dispatch recurrences
///   A(x 0 t) = (2b-2)(2x-1) P + A(x t) + A(norm t)
///   A(x x t) = (4xb-2x-2b+2) P + 2 A(x t) - A(norm t)
///   A(x y t) = (4xb-4x-2b+3) P + A(x t) + 2 A(y t) - 2 A(norm t)  (y < x)
///   A(x y t) = (4xb-4x-2b+2) P + A(x t) + 2 A(y t) - 2 A(norm t)  (y > x)
/// with P = (2b-1)^(|t|-1), base cases A(0) = 0 and A(x) = 2x-1. The
/// evaluator memoizes subproblem values across calls.
class SummatoryEvaluator {
 public:
  explicit SummatoryEvaluator(Base base) : base_(base) {}
  Base base() const noexcept { return base_; }
  Int value(const Int& n);

 private:
  Base base_;
  std::map<Int, Int> memo_;
};

Int a_fast(Base base, const Int& n);

/// Coefficient word d_0 ... d_L over powers of (2b-1) with
/// A_b(n) = sum_i d_i (2b-1)^(L-i) and L = |rep_b(n)| - 2. Produced by
/// running the digit recurrences symbolically; arguments of the pure-power
/// form x b^l terminate through the closed form, contributing 2x-1 at power
/// l. When n itself is a pure power that top coefficient is folded down one
/// position (times 2b-1) so the word keeps its stated length.
struct Decomposition {
  Base base;
  Int n;
  int ell;             // L above
  std::vector<Int> d;  // size ell + 1

  Int reconstruct() const;
};

/// Requires n >= b (otherwise the coefficient word is undefined); throws
/// std::domain_error below that.
Decomposition decompose(Base base, const Int& n);

/// Fields base, n, ell, d[]; integers as decimal strings.
std::string to_json(const Decomposition& d);

struct MultiplicativityReport {
  bool ok = true;
  Int first_failure = -1;
};

/// Verifies A_b(n b) = (2b-1) A_b(n) for all n <= n_max.
MultiplicativityReport check_multiplicativity(Base base, const Int& n_max);

}  // namespace subwords
