#include "subwords/words.hpp"

#include <algorithm>
#include <charconv>

namespace subwords {

Int int_pow(const Int& base, unsigned exp) {
  Int result(1);
  Int factor = base;
  while (exp != 0) {
    if (exp & 1u) result *= factor;
    exp >>= 1u;
    if (exp != 0) factor *= factor;
  }
  return result;
}

Word::Word(Base base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
  for (std::uint8_t d : digits_) {
    if (d >= base_.value()) throw std::domain_error("digit out of range for base");
  }
}

Word Word::parse(Base base, std::string_view text) {
  std::vector<std::uint8_t> digits;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      int value = 0;
      auto piece = text.substr(pos, next - pos);
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size()) {
        throw std::invalid_argument("malformed digit list");
      }
      if (value < 0 || value > 255) throw std::domain_error("digit out of range for base");
      digits.push_back(static_cast<std::uint8_t>(value));
      if (next == text.size()) break;
      pos = next + 1;
    }
  } else {
    digits.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed digit string");
      digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return Word(base, std::move(digits));
}

Word Word::appended(int digit) const {
  std::vector<std::uint8_t> digits = digits_;
  if (digit < 0 || digit >= base_.value()) throw std::domain_error("digit out of range for base");
  digits.push_back(static_cast<std::uint8_t>(digit));
  return Word(base_, std::move(digits));
}

std::string Word::str() const {
  if (base_.value() <= 10) {
    std::string out;
    out.reserve(digits_.size());
    for (std::uint8_t d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(static_cast<int>(digits_[i]));
  }
  return out;
}

Word rep(Base base, const Int& n) {
  if (n < 0) throw std::domain_error("rep expects a non-negative integer");
  std::vector<std::uint8_t> digits;
  Int rest = n;
  const int b = base.value();
  while (rest != 0) {
    digits.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(rest % b)));
    rest /= b;
  }
  std::reverse(digits.begin(), digits.end());
  return Word(base, std::move(digits));
}

Int val(const Word& w) {
  Int result(0);
  const int b = w.base().value();
  for (std::uint8_t d : w.digits()) {
    result *= b;
    result += d;
  }
  return result;
}

bool is_canonical(const Word& w) {
  return w.is_empty() || w.digit(0) != 0;
}

Int word_binomial(const Word& u, const Word& v) {
  if (u.base() != v.base()) throw std::invalid_argument("words over different bases");
  const std::size_t m = v.size();
  if (m > u.size()) return Int(0);
  // row[j] = binomial(prefix of u, first j digits of v)
  std::vector<Int> row(m + 1);
  row[0] = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = u.digit(i);
    const std::size_t upper = std::min(m, i + 1);
    for (std::size_t j = upper; j >= 1; --j) {
      if (v.digit(j - 1) == a) row[j] += row[j - 1];
    }
  }
  return row[m];
}

Int count_canonical_subwords(const Word& w) {
  SubwordCountState<Int> state(w.base());
  for (std::size_t i = w.size(); i-- > 0;) state.prepend(w.digit(i));
  return state.canonical_count();
}

Word digit_complement(const Word& w) {
  const int top = w.base().value() - 1;
  std::vector<std::uint8_t> digits;
  digits.reserve(w.size());
  for (std::uint8_t d : w.digits()) digits.push_back(static_cast<std::uint8_t>(top - d));
  return Word(w.base(), std::move(digits));
}

}  // namespace subwords
