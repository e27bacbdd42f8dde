#include "subwords/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "subwords/asymptotics.hpp"
#include "subwords/parallel.hpp"
#include "subwords/pascal.hpp"
#include "subwords/s_regular.hpp"
#include "subwords/summatory.hpp"
#include "subwords/trie.hpp"

namespace subwords::verify {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

std::vector<std::uint8_t> random_digits(std::mt19937_64& rng, Base base, int length,
                                        bool canonical) {
  std::uniform_int_distribution<int> digit(0, base.value() - 1);
  std::uniform_int_distribution<int> leading(1, base.value() - 1);
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int d = (i == 0 && canonical) ? leading(rng) : digit(rng);
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
  }
  return digits;
}

/// Distinct canonical subwords by explicit subset enumeration; exponential,
/// test-only.
Int enumerated_canonical_count(const Word& w) {
  std::set<std::vector<std::uint8_t>> seen;
  const std::size_t len = w.size();
  for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
    std::vector<std::uint8_t> sub;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask & (1ull << i)) sub.push_back(static_cast<std::uint8_t>(w.digit(i)));
    }
    if (!sub.empty() && sub[0] == 0) continue;
    seen.insert(std::move(sub));
  }
  return Int(seen.size());
}

/// Depth-first enumeration of every word of length <= depth_limit, leftmost
/// letter prepended last, with the subsequence-count state carried along.
/// visit(state, depth) returns false to abort the walk.
template <typename Visit>
bool walk_word_states(Base base, int depth_limit, Visit&& visit) {
  using State = SubwordCountState<Int>;
  auto recurse = [&](auto&& self, const State& state, int depth) -> bool {
    if (!visit(state, depth)) return false;
    if (depth == depth_limit) return true;
    for (int a = 0; a < base.value(); ++a) {
      State child = state;
      child.prepend(a);
      if (!self(self, child, depth + 1)) return false;
    }
    return true;
  };
  State root(base);
  return recurse(recurse, root, 0);
}

std::string count_detail(std::uint64_t checks) {
  return std::to_string(checks) + " checks";
}

}  // namespace

// words -----------------------------------------------------------------------

CheckResult check_roundtrip(Base base, std::uint64_t n_max) {
  const std::string name = "words.roundtrip";
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const Word w = rep(base, Int(n));
    if (val(w) != n) return fail(name, "val(rep(n)) != n at n=" + std::to_string(n));
    if (!is_canonical(w)) return fail(name, "rep produced a leading zero at n=" + std::to_string(n));
  }
  // Leading zeroes collapse under rep(val(.)).
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint8_t> digits = random_digits(rng, base, 9, false);
    digits.insert(digits.begin(), 0);
    const Word padded(base, digits);
    const Word canonical = rep(base, val(padded));
    if (val(canonical) != val(padded) || !is_canonical(canonical)) {
      return fail(name, "normalization failed for " + padded.str());
    }
  }
  return pass(name, count_detail(n_max + 1));
}

CheckResult check_binomial_pascal(Base base, int samples, std::uint64_t seed) {
  const std::string name = "words.binomial-pascal";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_u(0, 12);
  std::uniform_int_distribution<int> len_v(0, 6);
  std::uniform_int_distribution<int> digit(0, base.value() - 1);
  for (int i = 0; i < samples; ++i) {
    const Word u(base, random_digits(rng, base, len_u(rng), false));
    const Word v(base, random_digits(rng, base, len_v(rng), false));
    const int a = digit(rng);
    const int c = digit(rng);
    const Int lhs = word_binomial(u.appended(a), v.appended(c));
    Int rhs = word_binomial(u, v.appended(c));
    if (a == c) rhs += word_binomial(u, v);
    if (lhs != rhs) return fail(name, "identity failed for u=" + u.str() + " v=" + v.str());
    if (word_binomial(u, u) != 1) return fail(name, "C(u,u) != 1 for u=" + u.str());
    if (v.size() > u.size() && word_binomial(u, v) != 0) {
      return fail(name, "C(u,v) != 0 for longer v " + v.str());
    }
  }
  return pass(name, count_detail(static_cast<std::uint64_t>(samples)));
}

CheckResult check_count_vs_enumeration(Base base, int exhaustive_len, int sampled_len,
                                       int samples, std::uint64_t seed) {
  const std::string name = "words.count-vs-enumeration";
  std::uint64_t checks = 0;
  // Exhaustive over every word (leading zeroes included) up to the bound.
  std::vector<std::uint8_t> digits;
  auto recurse = [&](auto&& self) -> bool {
    const Word w(base, digits);
    ++checks;
    if (count_canonical_subwords(w) != enumerated_canonical_count(w)) return false;
    if (static_cast<int>(digits.size()) == exhaustive_len) return true;
    for (int a = 0; a < base.value(); ++a) {
      digits.push_back(static_cast<std::uint8_t>(a));
      const bool ok = self(self);
      digits.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!recurse(recurse)) return fail(name, "mismatch within exhaustive sweep");

  if (exhaustive_len < sampled_len) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(exhaustive_len + 1, sampled_len);
    for (int i = 0; i < samples; ++i) {
      const Word w(base, random_digits(rng, base, len(rng), false));
      ++checks;
      if (count_canonical_subwords(w) != enumerated_canonical_count(w)) {
        return fail(name, "mismatch for sampled word " + w.str());
      }
    }
  }
  return pass(name, count_detail(checks));
}

CheckResult check_complement(Base base, int exhaustive_len) {
  const std::string name = "words.complement";
  std::uint64_t checks = 0;
  std::vector<std::uint8_t> digits;
  auto recurse = [&](auto&& self) -> bool {
    const Word w(base, digits);
    ++checks;
    const Word comp = digit_complement(w);
    if (digit_complement(comp) != w) return false;
    const Int top = int_pow(Int(base.value()), static_cast<unsigned>(w.size()));
    if (val(comp) != top - 1 - val(w)) return false;
    if (static_cast<int>(digits.size()) == exhaustive_len) return true;
    for (int a = 0; a < base.value(); ++a) {
      digits.push_back(static_cast<std::uint8_t>(a));
      const bool ok = self(self);
      digits.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!recurse(recurse)) return fail(name, "complement identity failed");
  return pass(name, count_detail(checks));
}

// subword trie ----------------------------------------------------------------

namespace {

template <typename PerWord>
CheckResult sweep_canonical_words(const std::string& name, Base base, int exhaustive_len,
                                  int sampled_len, int samples, std::uint64_t seed,
                                  PerWord&& per_word) {
  std::uint64_t checks = 0;
  std::vector<std::uint8_t> digits;
  auto recurse = [&](auto&& self) -> bool {
    if (!digits.empty()) {
      ++checks;
      if (!per_word(Word(base, digits))) return false;
    }
    if (static_cast<int>(digits.size()) == exhaustive_len) return true;
    const int first = digits.empty() ? 1 : 0;  // canonical words only
    for (int a = first; a < base.value(); ++a) {
      digits.push_back(static_cast<std::uint8_t>(a));
      const bool ok = self(self);
      digits.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!recurse(recurse)) return fail(name, "failed within exhaustive sweep");

  if (exhaustive_len < sampled_len) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(exhaustive_len + 1, sampled_len);
    for (int i = 0; i < samples; ++i) {
      const Word w(base, random_digits(rng, base, len(rng), true));
      ++checks;
      if (!per_word(w)) return fail(name, "failed for sampled word " + w.str());
    }
  }
  return pass(name, count_detail(checks));
}

}  // namespace

CheckResult check_trie_counts(Base base, int exhaustive_len, int sampled_len, int samples,
                              std::uint64_t seed) {
  return sweep_canonical_words(
      "trie.node-count", base, exhaustive_len, sampled_len, samples, seed, [](const Word& w) {
        const SubwordTrie t = build_trie(w);
        if (t.node_count() != count_canonical_subwords(w)) return false;
        std::vector<Int> levels = t.level_counts();
        Int sum(0);
        for (const Int& c : levels) sum += c;
        return sum == t.node_count();
      });
}

CheckResult check_trie_structure(Base base, int exhaustive_len, int sampled_len, int samples,
                                 std::uint64_t seed) {
  return sweep_canonical_words(
      "trie.structure", base, exhaustive_len, sampled_len, samples, seed, [](const Word& w) {
        return verify_structure(build_trie(w), block_factorization(w));
      });
}

CheckResult check_lemma_identities(Base base, int u_len) {
  const std::string name = "trie.block-identities";
  const int b = base.value();
  using State = SubwordCountState<Int>;
  std::uint64_t checks = 0;

  const bool ok = walk_word_states(base, u_len, [&](const State& u_state, int) {
    const Int n_u = u_state.canonical_count();

    // One-letter extensions zu shared by all five identity families.
    std::vector<State> ext;
    ext.reserve(static_cast<std::size_t>(b));
    for (int a = 0; a < b; ++a) {
      State s = u_state;
      s.prepend(a);
      ext.push_back(std::move(s));
    }
    State zero_zero = ext[0];
    zero_zero.prepend(0);

    std::vector<Int> count_x0u(static_cast<std::size_t>(b));
    std::vector<Int> count_xu(static_cast<std::size_t>(b));
    for (int x = 1; x < b; ++x) {
      State s = ext[0];
      s.prepend(x);
      count_x0u[static_cast<std::size_t>(x)] = s.canonical_count();
      State t = u_state;
      t.prepend(x);
      count_xu[static_cast<std::size_t>(x)] = t.canonical_count();
    }

    for (int x = 1; x < b; ++x) {
      // x00u = 2 * x0u - xu
      State s = zero_zero;
      s.prepend(x);
      ++checks;
      if (s.canonical_count() !=
          2 * count_x0u[static_cast<std::size_t>(x)] - count_xu[static_cast<std::size_t>(x)]) {
        return false;
      }
      // xx0u = x0u + xu
      State t = ext[0];
      t.prepend(x);
      t.prepend(x);
      ++checks;
      if (t.canonical_count() !=
          count_x0u[static_cast<std::size_t>(x)] + count_xu[static_cast<std::size_t>(x)]) {
        return false;
      }
    }

    // Families on a nonzero pivot letter y: x0yu and xxyu.
    for (int y = 1; y < b; ++y) {
      const Int n_yu = ext[static_cast<std::size_t>(y)].canonical_count();
      State zero_y = ext[static_cast<std::size_t>(y)];
      zero_y.prepend(0);
      for (int x = 1; x < b; ++x) {
        State xy = ext[static_cast<std::size_t>(y)];
        xy.prepend(x);
        const Int n_xyu = xy.canonical_count();
        State x0y = zero_y;
        x0y.prepend(x);
        ++checks;
        if (x0y.canonical_count() != n_xyu + n_yu) return false;
        State xxy = xy;
        xxy.prepend(x);
        ++checks;
        if (xxy.canonical_count() != 2 * n_xyu - n_yu) return false;
      }
    }

    // xyzu for x != y nonzero and any z; for z = 0 the subtracted term is the
    // count of zu with leading zeroes stripped, which equals the count for u.
    for (int z = 0; z < b; ++z) {
      const State& zu = ext[static_cast<std::size_t>(z)];
      const Int n_znorm = (z == 0) ? n_u : zu.canonical_count();
      // over_zu[a] = count of the word a . z . u for a nonzero letter a
      std::vector<Int> over_zu(static_cast<std::size_t>(b));
      for (int a = 1; a < b; ++a) {
        State s = zu;
        s.prepend(a);
        over_zu[static_cast<std::size_t>(a)] = s.canonical_count();
      }
      for (int y = 1; y < b; ++y) {
        State yzu = zu;
        yzu.prepend(y);
        for (int x = 1; x < b; ++x) {
          if (x == y) continue;
          State xyzu = yzu;
          xyzu.prepend(x);
          ++checks;
          if (xyzu.canonical_count() != over_zu[static_cast<std::size_t>(x)] +
                                            2 * over_zu[static_cast<std::size_t>(y)] -
                                            2 * n_znorm) {
            return false;
          }
        }
      }
    }
    return true;
  });

  if (!ok) return fail(name, "identity failed");
  return pass(name, count_detail(checks));
}

// S_b -------------------------------------------------------------------------

CheckResult check_four_way(Base base, std::uint64_t n_max, int trie_rep_len, int trie_samples,
                           std::uint64_t seed) {
  const std::string name = "sreg.four-way";
  const LinearRepresentation lin = build_linear_representation(base);

  struct Slot {
    bool failed = false;
    std::uint64_t n = 0;
  };
  const unsigned workers = sweep_workers();
  std::vector<Slot> slots(std::max(1u, workers));
  parallel_chunks(0, n_max, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (std::uint64_t n = lo; n < hi; ++n) {
      const Int value(n);
      const Word digits = rep(base, value);
      const Int by_oracle = count_canonical_subwords(digits);
      if (by_oracle != s_recurrence(base, value) || by_oracle != s_fast(lin, value) ||
          by_oracle != build_trie(digits).node_count()) {
        slots[w].failed = true;
        slots[w].n = n;
        return;
      }
    }
  });
  for (const Slot& s : slots) {
    if (s.failed) return fail(name, "path disagreement at n=" + std::to_string(s.n));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(7, trie_rep_len);
  for (int i = 0; i < trie_samples; ++i) {
    const Word w(base, random_digits(rng, base, len(rng), true));
    const Int n = val(w);
    const Int by_oracle = count_canonical_subwords(w);
    if (by_oracle != s_recurrence(base, n) || by_oracle != s_fast(lin, n) ||
        by_oracle != build_trie(w).node_count()) {
      return fail(name, "path disagreement at sampled n=" + n.str());
    }
  }
  return pass(name, count_detail(n_max + static_cast<std::uint64_t>(trie_samples)));
}

CheckResult check_kernel_closure(Base base, std::uint64_t n_max) {
  const std::string name = "sreg.kernel-closure";
  const int b = base.value();
  const LinearRepresentation lin = build_linear_representation(base);

  // Oracle-built kernel vectors V(n) = (S(n), S(bn), ..., S(bn + b - 2)).
  const std::uint64_t table_size = (n_max * static_cast<std::uint64_t>(b) + b) *
                                       static_cast<std::uint64_t>(b) +
                                   static_cast<std::uint64_t>(b);
  std::vector<Int> s(table_size);
  for (std::uint64_t n = 0; n < table_size; ++n) s[n] = s_oracle(base, Int(n));
  auto oracle_state = [&](std::uint64_t n) {
    std::vector<Int> v(static_cast<std::size_t>(b));
    v[0] = s[n];
    for (int t = 0; t <= b - 2; ++t) {
      v[static_cast<std::size_t>(t) + 1] = s[n * static_cast<std::uint64_t>(b) +
                                             static_cast<std::uint64_t>(t)];
    }
    return v;
  };

  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::vector<Int> v = oracle_state(n);
    for (int digit = 0; digit < b; ++digit) {
      const std::vector<Int> expected =
          oracle_state(n * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(digit));
      if (lin.mu[static_cast<std::size_t>(digit)].apply(v) != expected) {
        return fail(name, "kernel relation failed at n=" + std::to_string(n) +
                              ", digit=" + std::to_string(digit));
      }
    }
  }
  return pass(name, count_detail((n_max + 1) * static_cast<std::uint64_t>(b)));
}

namespace {

/// Digit-pattern classes of remainders r < b^2, written against the top
/// digit b-1 and generic letters x, y in {1, ..., b-2}.
enum class RClass { Eps, X, Top, X0, Top0, XX, TopTop, XY, TopX, XTop };

struct RPattern {
  RClass cls;
  int x = 0;  // generic letter of the class, when present
  int y = 0;
};

RPattern classify_remainder(Base base, int r) {
  const int b = base.value();
  const Word w = rep(base, Int(r));
  if (w.size() == 0) return {RClass::Eps};
  if (w.size() == 1) {
    const int d = w.digit(0);
    return d == b - 1 ? RPattern{RClass::Top} : RPattern{RClass::X, d};
  }
  const int d0 = w.digit(0);
  const int d1 = w.digit(1);
  if (d1 == 0) return d0 == b - 1 ? RPattern{RClass::Top0} : RPattern{RClass::X0, d0};
  if (d0 == d1) return d0 == b - 1 ? RPattern{RClass::TopTop} : RPattern{RClass::XX, d0};
  if (d0 == b - 1) return {RClass::TopX, d1};
  if (d1 == b - 1) return {RClass::XTop, d0};
  return {RClass::XY, d0, d1};
}

Int expected_a(Base base, const RPattern& p) {
  const int b = base.value();
  switch (p.cls) {
    case RClass::Eps: return Int(-1);
    case RClass::X: return Int(-2);
    case RClass::Top: return Int(2 * b - 3);
    case RClass::X0: return Int(-2);
    case RClass::Top0: return Int(4 * b - 4);
    case RClass::XX: return Int(-1);
    case RClass::TopTop: return Int(4 * b - 3);
    case RClass::XY: return Int(-2);
    case RClass::TopX: return Int(4 * b - 4);
    case RClass::XTop: return Int(2 * b - 3);
  }
  return Int(0);
}

Int expected_c0(const RPattern& p) {
  switch (p.cls) {
    case RClass::Eps: return Int(2);
    case RClass::X: return Int(2);
    case RClass::Top: return Int(1);
    case RClass::X0: return Int(1);
    case RClass::Top0: return Int(-1);
    case RClass::XX: return Int(0);
    case RClass::TopTop: return Int(-2);
    case RClass::XY: return Int(0);
    case RClass::TopX: return Int(-2);
    case RClass::XTop: return Int(-1);
  }
  return Int(0);
}

Int expected_cs(const RPattern& p, int s) {
  switch (p.cls) {
    case RClass::Eps: return Int(0);
    case RClass::X: return Int(s == p.x ? 1 : 0);
    case RClass::Top: return Int(-1);
    case RClass::X0: return Int(s == p.x ? 2 : 0);
    case RClass::Top0: return Int(-2);
    case RClass::XX: return Int(s == p.x ? 2 : 0);
    case RClass::TopTop: return Int(-2);
    case RClass::XY:
      if (s == p.x) return Int(2);
      return Int(s == p.y ? 1 : 0);
    case RClass::TopX: return Int(s == p.x ? -1 : -2);
    case RClass::XTop: return Int(s == p.x ? 1 : -1);
  }
  return Int(0);
}

}  // namespace

CheckResult check_coefficient_tables(Base base) {
  const std::string name = "sreg.coefficient-tables";
  const int b = base.value();
  if (b < 3) return fail(name, "pattern tables require base >= 3");
  const RegularityCoefficients coeffs = solve_coefficients(base);
  for (int r = 0; r < b * b; ++r) {
    const RPattern p = classify_remainder(base, r);
    if (coeffs.a[static_cast<std::size_t>(r)] != expected_a(base, p)) {
      return fail(name, "a mismatch at r=" + std::to_string(r));
    }
    if (coeffs.c[static_cast<std::size_t>(r)][0] != expected_c0(p)) {
      return fail(name, "c0 mismatch at r=" + std::to_string(r));
    }
    for (int s = 1; s <= b - 2; ++s) {
      if (coeffs.c[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] !=
          expected_cs(p, s)) {
        return fail(name, "c mismatch at r=" + std::to_string(r) + ", s=" + std::to_string(s));
      }
    }
  }
  return pass(name, count_detail(static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b)));
}

CheckResult check_regularity_relations(Base base, std::uint64_t n_max) {
  const std::string name = "sreg.relations";
  const RegularityReport report = verify_regularity(base, Int(n_max));
  if (!report.ok) return fail(name, report.summary());
  return pass(name, report.summary());
}

CheckResult check_system_inverse(Base base) {
  const std::string name = "sreg.system-inverse";
  const int b = base.value();
  // The assembled blocks are the actual initial S values.
  const IntMatrix m = regularity_system_matrix(base);
  for (int n = 0; n < b; ++n) {
    const Int expected_first = s_oracle(base, Int(n));
    if (m.at(static_cast<std::size_t>(n) * static_cast<std::size_t>(b * b), 0) != expected_first) {
      return fail(name, "block value disagrees with S at n=" + std::to_string(n));
    }
    for (int col = 1; col < b; ++col) {
      const Int expected = s_oracle(base, Int(n * b + col - 1));
      if (m.at(static_cast<std::size_t>(n) * static_cast<std::size_t>(b * b),
               static_cast<std::size_t>(col) * static_cast<std::size_t>(b * b)) != expected) {
        return fail(name, "block value disagrees with S at n=" + std::to_string(n) +
                              ", column " + std::to_string(col));
      }
    }
  }
  const IntMatrix product = m * regularity_system_inverse(base);
  if (product != IntMatrix::identity(product.rows())) {
    return fail(name, "product is not the identity");
  }
  return pass(name, "dimension " + std::to_string(product.rows()));
}

CheckResult check_initial_table(Base base) {
  const std::string name = "sreg.initial-table";
  const int b = base.value();
  const std::uint64_t limit = static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b) *
                              static_cast<std::uint64_t>(b);
  for (std::uint64_t n = 0; n < limit; ++n) {
    const Word w = rep(base, Int(n));
    int expected = 0;
    const auto& d = w.digits();
    switch (w.size()) {
      case 0: expected = 1; break;
      case 1: expected = 2; break;
      case 2:
        if (d[1] == 0) expected = 3;
        else expected = (d[0] == d[1]) ? 3 : 4;
        break;
      default: {
        const int x = d[0], m = d[1], t = d[2];
        if (m == 0) {
          if (t == 0) expected = 4;
          else expected = (t == x) ? 5 : 6;
        } else if (m == x) {
          if (t == 0) expected = 5;
          else expected = (t == x) ? 4 : 6;
        } else {
          if (t == 0) expected = 7;
          else if (t == x) expected = 7;
          else if (t == m) expected = 6;
          else expected = 8;
        }
        break;
      }
    }
    if (s_oracle(base, Int(n)) != expected) {
      return fail(name, "table value mismatch at n=" + std::to_string(n));
    }
  }
  return pass(name, count_detail(limit));
}

CheckResult check_two_digit_tables(Base base) {
  const std::string name = "sreg.two-digit-tables";
  const int b = base.value();
  if (b < 3) return fail(name, "pattern tables require base >= 3");
  const std::uint64_t bb = static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b);
  const LinearRepresentation lin = build_linear_representation(base);
  const std::vector<Int> s = s_table(lin, (bb + 1) * bb);

  for (std::uint64_t n = static_cast<std::uint64_t>(b); n < bb; ++n) {
    const int hi = static_cast<int>(n) / b;
    const int lo = static_cast<int>(n) % b;
    for (std::uint64_t r = 0; r < bb; ++r) {
      const Word w = rep(base, Int(r));
      int expected = -1;
      if (lo == 0 || lo == hi) {
        // Reference letter x = hi; the tables for patterns x0 and xx.
        const bool doubled = (lo == hi);
        auto letter_class = [&](int d) { return d == hi ? 0 : 1; };  // 0: x, 1: other
        if (w.size() == 0) expected = doubled ? 7 : 5;
        else if (w.size() == 1) {
          expected = letter_class(w.digit(0)) == 0 ? (doubled ? 8 : 7) : (doubled ? 10 : 8);
        } else {
          const int d0 = w.digit(0), d1 = w.digit(1);
          if (d1 == 0) expected = letter_class(d0) == 0 ? (doubled ? 7 : 8) : (doubled ? 11 : 10);
          else if (d0 == d1) expected = letter_class(d0) == 0 ? (doubled ? 5 : 7) : (doubled ? 9 : 9);
          else if (letter_class(d0) == 0) expected = doubled ? 8 : 10;
          else if (letter_class(d1) == 0) expected = doubled ? 10 : 11;
          else expected = 12;
        }
      } else {
        // Pattern xy: x = hi, y = lo, fresh letters z (and t).
        auto cls = [&](int d) {
          if (d == hi) return 0;  // x
          if (d == lo) return 1;  // y
          return 2;               // z-class
        };
        if (w.size() == 0) expected = 10;
        else if (w.size() == 1) {
          expected = (cls(w.digit(0)) == 0) ? 13 : (cls(w.digit(0)) == 1 ? 12 : 14);
        } else {
          const int d0 = w.digit(0), d1 = w.digit(1);
          if (d1 == 0) expected = (cls(d0) == 0) ? 13 : (cls(d0) == 1 ? 11 : 15);
          else if (d0 == d1) expected = (cls(d0) == 0) ? 10 : (cls(d0) == 1 ? 8 : 12);
          else {
            const int c0 = cls(d0), c1 = cls(d1);
            if (c0 == 0) expected = (c1 == 1) ? 12 : 14;
            else if (c0 == 1) expected = (c1 == 0) ? 11 : 12;
            else expected = (c1 == 0) ? 15 : (c1 == 1 ? 14 : 16);
          }
        }
      }
      if (s[n * bb + r] != expected) {
        return fail(name, "pattern value mismatch at n=" + std::to_string(n) +
                              ", r=" + std::to_string(r));
      }
    }
  }
  return pass(name, count_detail((bb - static_cast<std::uint64_t>(b)) * bb));
}

CheckResult check_palindrome_intervals(Base base, int ell_max) {
  const std::string name = "sreg.palindrome-intervals";
  for (int ell = 1; ell <= ell_max; ++ell) {
    if (!palindrome_check(base, ell)) {
      return fail(name, "palindrome failed at level " + std::to_string(ell));
    }
  }
  return pass(name, "levels 1.." + std::to_string(ell_max));
}

CheckResult check_palindrome_words(Base base, int u_len) {
  const std::string name = "sreg.palindrome-words";
  const int b = base.value();
  // counts[l][v] = canonical subword count of (b-1) . u where u is the
  // length-l digit string of value v (leading zeroes significant).
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(u_len) + 1);
  for (int l = 0; l <= u_len; ++l) {
    counts[static_cast<std::size_t>(l)].assign(
        static_cast<std::size_t>(int_pow(Int(b), static_cast<unsigned>(l)).convert_to<std::uint64_t>()),
        0);
  }

  using State = SubwordCountState<Int>;
  std::vector<std::uint64_t> value_stack = {0};
  auto recurse = [&](auto&& self, const State& state, int depth) -> void {
    State top = state;
    top.prepend(b - 1);
    counts[static_cast<std::size_t>(depth)][value_stack.back()] =
        top.canonical_count().convert_to<std::uint64_t>();
    if (depth == u_len) return;
    const std::uint64_t scale =
        int_pow(Int(b), static_cast<unsigned>(depth)).convert_to<std::uint64_t>();
    for (int a = 0; a < b; ++a) {
      State child = state;
      child.prepend(a);
      // Prepending digit a raises the value by a * b^depth.
      value_stack.push_back(value_stack.back() + static_cast<std::uint64_t>(a) * scale);
      self(self, child, depth + 1);
      value_stack.pop_back();
    }
  };
  State root(base);
  recurse(recurse, root, 0);

  std::uint64_t checks = 0;
  for (int l = 0; l <= u_len; ++l) {
    const auto& row = counts[static_cast<std::size_t>(l)];
    const std::uint64_t size = row.size();
    for (std::uint64_t v = 0; v < size; ++v) {
      ++checks;
      if (row[v] != row[size - 1 - v]) {
        return fail(name, "complement symmetry failed at length " + std::to_string(l) +
                              ", value " + std::to_string(v));
      }
    }
  }
  return pass(name, count_detail(checks));
}

// summatory ---------------------------------------------------------------------

namespace {

/// Oracle prefix sums A(0..count) from the definitional subword counter.
std::vector<Int> oracle_prefix_sums(Base base, std::uint64_t count) {
  std::vector<Int> a(count + 1);
  Int run(0);
  for (std::uint64_t n = 0; n < count; ++n) {
    a[n] = run;
    run += count_canonical_subwords(rep(base, Int(n)));
  }
  a[count] = run;
  return a;
}

}  // namespace

CheckResult check_summatory_agreement(Base base, std::uint64_t n_max) {
  const std::string name = "summ.fast-vs-oracle";
  const std::vector<Int> a = oracle_prefix_sums(base, n_max);
  SummatoryEvaluator evaluator(base);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (evaluator.value(Int(n)) != a[n]) {
      return fail(name, "A mismatch at n=" + std::to_string(n));
    }
  }
  return pass(name, count_detail(n_max + 1));
}

CheckResult check_summatory_closed_forms(Base base, std::uint64_t limit) {
  const std::string name = "summ.closed-forms";
  const int b = base.value();
  const std::vector<Int> a = oracle_prefix_sums(base, limit);
  std::uint64_t checks = 0;
  for (int x = 1; x <= b - 1; ++x) {
    for (int ell = 0;; ++ell) {
      const Int arg = Int(x) * int_pow(Int(b), static_cast<unsigned>(ell));
      if (arg > limit) break;
      ++checks;
      if (a_closed_form_pure(base, x, ell) != a[arg.convert_to<std::uint64_t>()]) {
        return fail(name, "pure form mismatch at x=" + std::to_string(x) +
                              ", l=" + std::to_string(ell));
      }
    }
  }
  for (int x = 1; x <= b - 1; ++x) {
    for (int y = 1; y <= b - 1; ++y) {
      for (int ell = 1;; ++ell) {
        const Int arg = Int(x) * int_pow(Int(b), static_cast<unsigned>(ell)) +
                        Int(y) * int_pow(Int(b), static_cast<unsigned>(ell - 1));
        if (arg > limit) break;
        ++checks;
        if (a_closed_form_mixed(base, x, y, ell) != a[arg.convert_to<std::uint64_t>()]) {
          return fail(name, "mixed form mismatch at x=" + std::to_string(x) + ", y=" +
                                std::to_string(y) + ", l=" + std::to_string(ell));
        }
      }
    }
  }
  return pass(name, count_detail(checks));
}

CheckResult check_summatory_recurrences(Base base, int ell_max) {
  const std::string name = "summ.recurrences";
  const int b = base.value();
  const std::uint64_t limit =
      int_pow(Int(b), static_cast<unsigned>(ell_max) + 1).convert_to<std::uint64_t>();
  const std::vector<Int> a = oracle_prefix_sums(base, limit);
  auto at = [&](const Int& idx) { return a[idx.convert_to<std::uint64_t>()]; };
  const Int unit(2 * b - 1);
  std::uint64_t checks = 0;

  for (int ell = 1; ell <= ell_max; ++ell) {
    const Int bl = int_pow(Int(b), static_cast<unsigned>(ell));
    const Int bl1 = int_pow(Int(b), static_cast<unsigned>(ell - 1));
    const Int power = int_pow(unit, static_cast<unsigned>(ell - 1));
    // r runs inclusively up to b^(l-1), as the relations are stated.
    for (Int r(0); r <= bl1; ++r) {
      for (int x = 1; x <= b - 1; ++x) {
        const Int xb = Int(x) * bl;
        const Int xs = Int(x) * bl1;
        ++checks;
        if (at(xb + r) != Int(2 * b - 2) * (2 * x - 1) * power + at(xs + r) + at(r)) {
          return fail(name, "first relation failed at x=" + std::to_string(x) +
                                ", l=" + std::to_string(ell) + ", r=" + r.str());
        }
        ++checks;
        if (at(xb + xs + r) !=
            Int(4 * x * b - 2 * x - 2 * b + 2) * power + 2 * at(xs + r) - at(r)) {
          return fail(name, "second relation failed at x=" + std::to_string(x) +
                                ", l=" + std::to_string(ell) + ", r=" + r.str());
        }
        for (int y = 1; y <= b - 1; ++y) {
          if (y == x) continue;
          const Int ys = Int(y) * bl1;
          const int factor =
              (y < x) ? (4 * x * b - 4 * x - 2 * b + 3) : (4 * x * b - 4 * x - 2 * b + 2);
          ++checks;
          if (at(xb + ys + r) != Int(factor) * power + at(xs + r) + 2 * at(ys + r) - 2 * at(r)) {
            return fail(name, "third relation failed at x=" + std::to_string(x) + ", y=" +
                                  std::to_string(y) + ", l=" + std::to_string(ell) +
                                  ", r=" + r.str());
          }
        }
      }
    }
  }
  return pass(name, count_detail(checks));
}

CheckResult check_multiplicativity(Base base, std::uint64_t n_max) {
  const std::string name = "summ.multiplicativity";
  const MultiplicativityReport report = subwords::check_multiplicativity(base, Int(n_max));
  if (!report.ok) return fail(name, "failed at n=" + report.first_failure.str());
  return pass(name, count_detail(n_max + 1));
}

CheckResult check_decomposition(Base base, int samples, std::uint64_t seed) {
  const std::string name = "summ.decomposition";
  std::mt19937_64 rng(seed);
  SummatoryEvaluator evaluator(base);
  const int b = base.value();
  for (int i = 0; i < samples; ++i) {
    Int n(rng());
    if (n < b) n += b;
    const Decomposition dec = decompose(base, n);
    if (dec.reconstruct() != evaluator.value(n)) {
      return fail(name, "reconstruction failed at n=" + n.str());
    }
    if (static_cast<int>(dec.d.size()) != dec.ell + 1) {
      return fail(name, "wrong coefficient count at n=" + n.str());
    }
    const Word w = rep(base, n);
    bool pure = true;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (w.digit(k) != 0) {
        pure = false;
        break;
      }
    }
    if (!pure && dec.d[0] == 0) {
      return fail(name, "leading coefficient vanished at n=" + n.str());
    }
  }
  return pass(name, count_detail(static_cast<std::uint64_t>(samples)));
}

CheckResult check_monotonicity(Base base, std::uint64_t n_max) {
  const std::string name = "summ.monotonicity";
  SummatoryEvaluator evaluator(base);
  Int previous = evaluator.value(Int(0));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Int current = evaluator.value(Int(n));
    if (current <= previous) return fail(name, "not increasing at n=" + std::to_string(n));
    previous = current;
  }
  return pass(name, count_detail(n_max));
}

// asymptotics -------------------------------------------------------------------

CheckResult check_asymptotic_endpoints(Base base, int n, int resolution, double tolerance) {
  const std::string name = "asym.endpoints";
  const std::vector<HPoint> series = sample_h(base, n, resolution);
  const double first = series.front().value;
  const double last = series.back().value;
  if (std::fabs(first - 1.0) >= tolerance) {
    return fail(name, "estimate at x=0 is " + std::to_string(first));
  }
  if (std::fabs(last - first) >= tolerance) {
    return fail(name, "period endpoints differ by " + std::to_string(std::fabs(last - first)));
  }
  std::ostringstream detail;
  detail << "|H(0)-1| = " << std::fabs(first - 1.0);
  return pass(name, detail.str());
}

CheckResult check_asymptotic_convergence(Base base, int n_lo, int n_hi, int resolution,
                                         double slack) {
  const std::string name = "asym.convergence";
  std::vector<double> gaps;
  std::vector<HPoint> previous = sample_h(base, n_lo, resolution);
  for (int n = n_lo + 1; n <= n_hi; ++n) {
    std::vector<HPoint> current = sample_h(base, n, resolution);
    double gap = 0.0;
    for (int k = 0; k < resolution; ++k) {
      gap = std::max(gap, std::fabs(current[static_cast<std::size_t>(k)].value -
                                    previous[static_cast<std::size_t>(k)].value));
    }
    gaps.push_back(gap);
    previous = std::move(current);
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] > gaps[i - 1] + slack) {
      return fail(name, "gap grew between levels " + std::to_string(n_lo + static_cast<int>(i)) +
                            " and " + std::to_string(n_lo + static_cast<int>(i) + 1));
    }
  }
  if (gaps.back() >= gaps.front()) {
    return fail(name, "no overall contraction across levels");
  }
  std::ostringstream detail;
  detail << "gap " << gaps.front() << " -> " << gaps.back();
  return pass(name, detail.str());
}

CheckResult check_scaling(Base base, int samples) {
  const std::string name = "asym.scaling";
  const ScalingReport report = scaling_identity_check(base, samples);
  if (!report.exact_ok) {
    return fail(name, "integer scaling failed at m=" + report.first_failure_m.str() +
                          ", j=" + std::to_string(report.first_failure_j));
  }
  if (report.max_float_deviation >= 1e-9L) {
    return fail(name, "ratio spread " + std::to_string(static_cast<double>(report.max_float_deviation)));
  }
  std::ostringstream detail;
  detail << "ratio spread " << static_cast<double>(report.max_float_deviation);
  return pass(name, detail.str());
}

// pascal ------------------------------------------------------------------------

CheckResult check_triangle_rows(Base base, std::uint64_t m_max) {
  const std::string name = "pascal.row-counts";
  for (std::uint64_t m = 0; m < m_max; ++m) {
    if (row_positive_count(base, Int(m)) != s_oracle(base, Int(m))) {
      return fail(name, "row count mismatch at m=" + std::to_string(m));
    }
  }
  return pass(name, count_detail(m_max));
}

CheckResult check_embedded_binomials(Base base, int m_max) {
  const std::string name = "pascal.embedded";
  // Classical binomials by the additive rule, independent of word_binomial.
  std::vector<std::vector<Int>> binomial(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    binomial[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, Int(1));
    for (int k = 1; k < m; ++k) {
      binomial[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          binomial[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k) - 1] +
          binomial[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k)];
    }
  }
  for (int a = 1; a < base.value(); ++a) {
    for (int m = 0; m <= m_max; ++m) {
      const Word row(base, std::vector<std::uint8_t>(static_cast<std::size_t>(m),
                                                     static_cast<std::uint8_t>(a)));
      for (int k = 0; k <= m; ++k) {
        const Word col(base, std::vector<std::uint8_t>(static_cast<std::size_t>(k),
                                                       static_cast<std::uint8_t>(a)));
        if (word_binomial(row, col) !=
            binomial[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]) {
          return fail(name, "embedded triangle mismatch at a=" + std::to_string(a) +
                                ", m=" + std::to_string(m) + ", k=" + std::to_string(k));
        }
      }
    }
  }
  return pass(name, count_detail(static_cast<std::uint64_t>(m_max) *
                                 static_cast<std::uint64_t>(base.value())));
}

std::vector<CheckResult> run_default_suite(Base base, std::uint64_t sweep_max) {
  const int b = base.value();
  std::vector<CheckResult> results;

  auto length_for = [&](std::uint64_t budget) {
    int len = 1;
    std::uint64_t total = static_cast<std::uint64_t>(b);
    while (total * static_cast<std::uint64_t>(b) <= budget) {
      total *= static_cast<std::uint64_t>(b);
      ++len;
    }
    return len;
  };

  std::uint64_t pow6 = 1;
  for (int i = 0; i < 6; ++i) pow6 *= static_cast<std::uint64_t>(b);
  const std::uint64_t sweep = std::min(sweep_max, pow6);

  results.push_back(check_roundtrip(base, std::min<std::uint64_t>(sweep_max, 20000)));
  results.push_back(check_binomial_pascal(base, 300, 101));
  results.push_back(check_count_vs_enumeration(base, std::min(length_for(3000), 8), 10, 200, 202));
  results.push_back(check_complement(base, length_for(100000)));
  results.push_back(check_trie_counts(base, std::min(length_for(20000), 8), 12, 200, 303));
  results.push_back(check_trie_structure(base, std::min(length_for(20000), 8), 12, 200, 404));
  results.push_back(check_lemma_identities(base, b <= 4 ? 8 : 5));
  results.push_back(check_four_way(base, std::min<std::uint64_t>(sweep, 100000), 12, 500, 505));
  results.push_back(check_kernel_closure(base, 2000));
  if (b >= 3) results.push_back(check_coefficient_tables(base));
  results.push_back(check_regularity_relations(
      base, std::min<std::uint64_t>(sweep_max,
                                    static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b) *
                                        static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b))));
  if (b <= 6) results.push_back(check_system_inverse(base));
  results.push_back(check_initial_table(base));
  if (b >= 3 && b <= 8) results.push_back(check_two_digit_tables(base));
  results.push_back(check_palindrome_intervals(base, std::min(8, length_for(200000))));
  results.push_back(check_palindrome_words(base, std::min(10, length_for(1500000))));
  results.push_back(check_summatory_agreement(base, std::min<std::uint64_t>(sweep, 50000)));
  results.push_back(check_summatory_closed_forms(base, std::min<std::uint64_t>(pow6, 50000)));
  results.push_back(check_summatory_recurrences(base, b <= 4 ? 6 : 4));
  results.push_back(check_multiplicativity(base, std::min<std::uint64_t>(sweep_max, 20000)));
  results.push_back(check_decomposition(base, 100, 606));
  results.push_back(check_monotonicity(base, std::min<std::uint64_t>(sweep_max, 20000)));
  results.push_back(check_asymptotic_endpoints(base, 12, 512, 1e-2));
  results.push_back(check_asymptotic_convergence(base, 4, 10, 64, 1e-3));
  results.push_back(check_scaling(base, 50));
  results.push_back(check_triangle_rows(
      base, std::min<std::uint64_t>(static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b) *
                                        static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b),
                                    2000)));
  results.push_back(check_embedded_binomials(base, 12));
  return results;
}

}  // namespace subwords::verify
