#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subwords {

/// Exact arithmetic everywhere: subword counts grow exponentially in the
/// word length and matrix entries carry signs, so all public counters are
/// arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

Int int_pow(const Int& base, unsigned exp);

/// A number base b >= 2. Digits range over {0, ..., b-1}.
class Base {
 public:
  explicit Base(int b) : b_(b) {
    if (b < 2) throw std::invalid_argument("base must be at least 2");
  }
  int value() const noexcept { return b_; }
  friend bool operator==(const Base&, const Base&) = default;

 private:
  int b_;
};

/// A finite digit word over {0, ..., b-1}, most significant digit first.
/// The empty word is valid and denotes the expansion of zero.
class Word {
 public:
  Word(Base base, std::vector<std::uint8_t> digits);
  static Word empty(Base base) { return Word(base, {}); }

  /// Parses "121" style strings (one character per digit, bases up to 10)
  /// or comma-separated digit lists ("12,0,7") for larger bases.
  static Word parse(Base base, std::string_view text);

  Base base() const noexcept { return base_; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_empty() const noexcept { return digits_.empty(); }
  int digit(std::size_t i) const { return digits_.at(i); }

  Word appended(int digit) const;

  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  Base base_;
  std::vector<std::uint8_t> digits_;
};

/// Greedy base-b expansion of n; rep(b, 0) is the empty word and for n >= 1
/// the leading digit is nonzero.
Word rep(Base base, const Int& n);

/// Value of a digit word, leading zeroes permitted.
Int val(const Word& w);

/// True iff w is a canonical expansion: empty, or starting with a nonzero
/// digit.
bool is_canonical(const Word& w);

/// Number of occurrences of v as a scattered subword (subsequence) of u.
/// Classical prefix tabulation, O(|u|*|v|) exact operations.
Int word_binomial(const Word& u, const Word& v);

/// Number of distinct canonical words occurring as subwords of w, counting
/// the empty word. Equals the node count of the subword trie of w.
Int count_canonical_subwords(const Word& w);

/// Digitwise complement: every digit a is replaced by (b-1)-a.
Word digit_complement(const Word& w);

/// Incremental distinct-subsequence counter. A word is built by prepending
/// digits (rightmost digit first); at every step the state knows
///   total()            - distinct subsequences of the current word, incl. the
///                        empty one, and
///   canonical_count()  - distinct subwords lying in the canonical language
///                        (empty word or nonzero first digit).
/// Prepending digit a uses the suffix recurrence F(aw) = 2 F(w) - F(w after
/// the first earlier occurrence of a); each step costs O(1) big-int ops.
///
/// The template parameter selects the counter type; the default is exact.
/// std::uint64_t is safe while the word stays shorter than 64 digits.
template <typename IntT = Int>
class SubwordCountState {
 public:
  explicit SubwordCountState(Base base)
      : base_(base.value()),
        total_(1),
        after_first_(static_cast<std::size_t>(base.value())),
        seen_(static_cast<std::size_t>(base.value()), false) {}

  void prepend(int digit) {
    if (digit < 0 || digit >= base_) throw std::invalid_argument("digit out of range");
    const auto d = static_cast<std::size_t>(digit);
    IntT next = total_;
    next += total_;
    if (seen_[d]) next -= after_first_[d];
    after_first_[d] = total_;
    seen_[d] = true;
    total_ = std::move(next);
  }

  /// Distinct subsequences of the current word, including the empty one.
  const IntT& total() const noexcept { return total_; }

  /// Distinct subsequences beginning with the given digit.
  IntT starting_with(int digit) const {
    const auto d = static_cast<std::size_t>(digit);
    return seen_[d] ? after_first_[d] : IntT(0);
  }

  /// 1 (empty word) plus all distinct subsequences with nonzero first digit.
  IntT canonical_count() const {
    IntT count(1);
    for (int a = 1; a < base_; ++a) {
      if (seen_[static_cast<std::size_t>(a)]) count += after_first_[static_cast<std::size_t>(a)];
    }
    return count;
  }

 private:
  int base_;
  IntT total_;
  std::vector<IntT> after_first_;
  std::vector<bool> seen_;
};

}  // namespace subwords
