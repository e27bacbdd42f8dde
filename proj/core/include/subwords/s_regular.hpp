#pragma once

#include <map>
#include <string>
#include <vector>

#include "subwords/matrix.hpp"
#include "subwords/words.hpp"

namespace subwords {

/// S_b(n): number of canonical words occurring as subwords of rep_b(n),
/// the empty word included. Definitional path via the subsequence counter.
Int s_oracle(Base base, const Int& n);

/// S_b(n) through the three digit recurrences
///   S(x 0 t) = S(x t) + S(norm t)
///   S(x x t) = 2 S(x t) - S(norm t)
///   S(x y t) = S(x t) + 2 S(y t) - 2 S(norm t)   (y distinct from 0 and x)
/// where norm strips leading zeroes. Memoized over (leading digit, suffix
/// start) pairs of the digit string of n, so one call costs O(b * |rep(n)|)
/// subproblems.
Int s_recurrence(Base base, const Int& n);

/// The arrays a_r (r < b^2) and c_{r,s} (s <= b-2) with
///   S_b(n b^2 + r) = a_r S_b(n) + sum_s c_{r,s} S_b(n b + s).
struct RegularityCoefficients {
  Base base;
  std::vector<Int> a;               // size b^2
  std::vector<std::vector<Int>> c;  // c[r][s], r < b^2, s <= b-2
};

/// Coefficients from their closed forms in terms of S_b(0..b^3-1):
///   a_r     = 3 S(r) + 2 sum_{j=1}^{b-2} S(j b^2 + r) - (2b-3) S((b-1) b^2 + r)
///   c_{r,0} = -2 S(r) + S((b-1) b^2 + r)
///   c_{r,s} = -S(s b^2 + r) + S((b-1) b^2 + r)
RegularityCoefficients solve_coefficients(Base base);

/// The b digit matrices mu(s) of size b x b, the initial vector
/// V(0) = (1, 1, 2, ..., 2) and the first-coordinate selector, satisfying
/// V(b n + s) = mu(s) V(n) where V(n) = (S(n), S(bn), ..., S(bn + b - 2)).
struct LinearRepresentation {
  Base base;
  std::vector<IntMatrix> mu;
  std::vector<Int> v0;

  std::vector<Int> state(const Int& n) const;  // V(n)
};

LinearRepresentation build_linear_representation(Base base);

/// S_b(n) as selector * mu(n_0) ... mu(n_k) * V(0) where n_0 is the least
/// significant digit and appears leftmost; evaluated right to left as
/// O(log_b n) exact matrix-vector products.
Int s_fast(const LinearRepresentation& rep, const Int& n);
Int s_fast(Base base, const Int& n);

/// S_b(0), ..., S_b(count - 1) through the linear representation, sharing the
/// kernel vectors so the table costs O(count * b) big-int operations.
std::vector<Int> s_table(const LinearRepresentation& rep, std::size_t count);

struct RegularityReport {
  bool ok = true;
  bool relation_ok = true;        // S(n b^2 + r) identity for all n, r checked
  bool reduction_ok = true;       // S(n b + b - 1) identity for all n checked
  bool redundancy_ok = true;      // the b dependent rows are integer combinations
  Int first_failure_n = -1;
  int first_failure_r = -1;
  std::string summary() const;
};

/// Sweeps the two identity families for n <= n_max and certifies that the
/// rows for remainders b r' + (b-1) are integer combinations of the others.
RegularityReport verify_regularity(Base base, const Int& n_max);

/// True iff S((b-1) b^l + r) = S((b-1) b^l + b^l - r - 1) for all r < b^l.
bool palindrome_check(Base base, int ell);

/// Base-case system matrix of the coefficient solve: the b^3 x b^3
/// block matrix with blocks S(n) I and S(b n + s) I, assembled from the
/// initial values of S_b, together with its closed-form inverse.
IntMatrix regularity_system_matrix(Base base);
IntMatrix regularity_system_inverse(Base base);

/// JSON interchange object with fields base, a[], c[][], mu[][][] (row-major)
/// and v0[]; all integers as decimal strings.
std::string regularity_json(const RegularityCoefficients& coeffs,
                            const LinearRepresentation& rep);

}  // namespace subwords
