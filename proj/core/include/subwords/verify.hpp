#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subwords/words.hpp"

namespace subwords::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// words ---------------------------------------------------------------------

/// val(rep(n)) = n for n <= n_max, and rep(val(w)) strips leading zeroes.
CheckResult check_roundtrip(Base base, std::uint64_t n_max);

/// Pascal-style identity of word binomials on random words.
CheckResult check_binomial_pascal(Base base, int samples, std::uint64_t seed);

/// count_canonical_subwords against brute-force subsequence enumeration:
/// exhaustive up to exhaustive_len, plus random words up to sampled_len.
CheckResult check_count_vs_enumeration(Base base, int exhaustive_len, int sampled_len,
                                       int samples, std::uint64_t seed);

/// Complement involution and the value identity val(comp u) = b^l - 1 - val u.
CheckResult check_complement(Base base, int exhaustive_len);

// subword trie --------------------------------------------------------------

/// Trie node count equals the counting DP: exhaustive canonical words up to
/// exhaustive_len, plus random canonical words up to sampled_len.
CheckResult check_trie_counts(Base base, int exhaustive_len, int sampled_len, int samples,
                              std::uint64_t seed);

/// Structural description of the trie versus the block factorization.
CheckResult check_trie_structure(Base base, int exhaustive_len, int sampled_len, int samples,
                                 std::uint64_t seed);

/// The five subword-count identities (prefix patterns x00, xx0, x0y, xxy,
/// xyz) for every admissible letter choice and every u up to u_len.
CheckResult check_lemma_identities(Base base, int u_len);

// S_b -----------------------------------------------------------------------

/// Oracle, recurrence and matrix paths agree for n < n_max; the trie node
/// count agrees wherever the expansion is short enough to build, plus random
/// longer expansions up to trie_rep_len digits.
CheckResult check_four_way(Base base, std::uint64_t n_max, int trie_rep_len, int trie_samples,
                           std::uint64_t seed);

/// V(bn+s) = mu(s) V(n) componentwise for n < n_max, all digits s.
CheckResult check_kernel_closure(Base base, std::uint64_t n_max);

/// Solved coefficients match their digit-pattern closed forms (b >= 3).
CheckResult check_coefficient_tables(Base base);

/// The two identity families for n < n_max plus the dependent-row
/// certificate.
CheckResult check_regularity_relations(Base base, std::uint64_t n_max);

/// Base-case system matrix times its closed-form inverse is the identity.
CheckResult check_system_inverse(Base base);

/// S values for n < b^3 match the initial-value pattern table.
CheckResult check_initial_table(Base base);

/// S(n b^2 + r) for two-digit n matches the three pattern tables.
CheckResult check_two_digit_tables(Base base);

/// Palindromic interval S((b-1) b^l + r) for l <= ell_max.
CheckResult check_palindrome_intervals(Base base, int ell_max);

/// Word form: the canonical subword count is invariant under digit
/// complement after a forced leading b-1, for every u up to u_len.
CheckResult check_palindrome_words(Base base, int u_len);

// summatory -----------------------------------------------------------------

/// a_fast equals the prefix-sum oracle for n <= n_max.
CheckResult check_summatory_agreement(Base base, std::uint64_t n_max);

/// Closed forms for pure and mixed leading digits against the oracle, full
/// admissible range below limit.
CheckResult check_summatory_closed_forms(Base base, std::uint64_t limit);

/// The three displayed recurrences verbatim, r running inclusively up to
/// b^(l-1), values from the oracle table.
CheckResult check_summatory_recurrences(Base base, int ell_max);

/// A(n b) = (2b-1) A(n) for n <= n_max.
CheckResult check_multiplicativity(Base base, std::uint64_t n_max);

/// Reconstruction identity and leading coefficient of decompositions for
/// random n (64-bit scale).
CheckResult check_decomposition(Base base, int samples, std::uint64_t seed);

/// A_b is strictly increasing.
CheckResult check_monotonicity(Base base, std::uint64_t n_max);

// asymptotics ---------------------------------------------------------------

/// Period endpoints of the sampled fluctuation sit near 1.
CheckResult check_asymptotic_endpoints(Base base, int n, int resolution, double tolerance);

/// Pointwise gaps between consecutive-level series shrink with the level.
CheckResult check_asymptotic_convergence(Base base, int n_lo, int n_hi, int resolution,
                                         double slack);

/// Exact and floating scaling invariance across powers of b.
CheckResult check_scaling(Base base, int samples);

// pascal --------------------------------------------------------------------

/// Row positive counts equal S_b for m < m_max.
CheckResult check_triangle_rows(Base base, std::uint64_t m_max);

/// The embedded classical Pascal triangles on constant-digit rows.
CheckResult check_embedded_binomials(Base base, int m_max);

/// Default suite for one base, sized to finish within a few minutes.
std::vector<CheckResult> run_default_suite(Base base, std::uint64_t sweep_max);

}  // namespace subwords::verify
