#include "subwords/summatory.hpp"

#include <nlohmann/json.hpp>

namespace subwords {

Int a_oracle(Base base, const Int& n) {
  if (n < 0) throw std::domain_error("summatory function expects n >= 0");
  if (n > kSummatoryOracleBudget) {
    throw std::domain_error("argument exceeds the oracle sweep budget; use a_fast");
  }
  Int sum(0);
  for (Int j(0); j < n; ++j) {
    sum += count_canonical_subwords(rep(base, j));
  }
  return sum;
}

Int a_closed_form_pure(Base base, int x, int ell) {
  const int b = base.value();
  if (x < 1 || x > b - 1) throw std::domain_error("digit x out of range");
  if (ell < 0) throw std::domain_error("exponent must be non-negative");
  return (2 * x - 1) * int_pow(Int(2 * b - 1), static_cast<unsigned>(ell));
}

Int a_closed_form_mixed(Base base, int x, int y, int ell) {
  const int b = base.value();
  if (x < 1 || x > b - 1 || y < 1 || y > b - 1) throw std::domain_error("digit out of range");
  if (ell < 1) throw std::domain_error("exponent must be positive");
  const int factor = (y <= x) ? (4 * x * b - 2 * x + 4 * y - 2 * b)
                              : (4 * x * b - 2 * x + 4 * y - 2 * b - 1);
  return factor * int_pow(Int(2 * b - 1), static_cast<unsigned>(ell - 1));
}

Int SummatoryEvaluator::value(const Int& n) {
  if (n < 0) throw std::domain_error("summatory function expects n >= 0");
  const int b = base_.value();
  if (n == 0) return Int(0);
  if (n < b) return Int(2) * n - 1;
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;

  const Word digits = rep(base_, n);
  const int x = digits.digit(0);
  const int z = digits.digit(1);
  const unsigned ell = static_cast<unsigned>(digits.size()) - 1;
  const Int power = int_pow(Int(2 * b - 1), ell - 1);

  // The three argument drops: second digit removed, first digit removed,
  // both removed (with leading zeroes stripped by the value conversion).
  std::vector<std::uint8_t> tail(digits.digits().begin() + 2, digits.digits().end());
  Word rest(base_, tail);
  Int r = val(rest);
  Int with_x = Int(x) * int_pow(Int(b), ell - 1) + r;

  Int result;
  if (z == 0) {
    result = Int(2 * b - 2) * (2 * x - 1) * power + value(with_x) + value(r);
  } else if (z == x) {
    result = Int(4 * x * b - 2 * x - 2 * b + 2) * power + 2 * value(with_x) - value(r);
  } else {
    Int with_z = Int(z) * int_pow(Int(b), ell - 1) + r;
    const int factor =
        (z < x) ? (4 * x * b - 4 * x - 2 * b + 3) : (4 * x * b - 4 * x - 2 * b + 2);
    result = Int(factor) * power + value(with_x) + 2 * value(with_z) - 2 * value(r);
  }
  memo_.emplace(n, result);
  return result;
}

Int a_fast(Base base, const Int& n) {
  SummatoryEvaluator evaluator(base);
  return evaluator.value(n);
}

namespace {

/// Sparse coefficient vector over powers of (2b-1).
using PowerVector = std::map<int, Int>;

void add_scaled(PowerVector& acc, const PowerVector& other, int scale) {
  for (const auto& [power, coeff] : other) {
    Int& slot = acc[power];
    slot += scale * coeff;
    if (slot == 0) acc.erase(power);
  }
}

class DecompositionBuilder {
 public:
  explicit DecompositionBuilder(Base base) : base_(base) {}

  PowerVector run(const Int& n) { return expand(n); }

 private:
  PowerVector expand(const Int& n) {
    if (n == 0) return {};
    const int b = base_.value();
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;

    const Word digits = rep(base_, n);
    PowerVector result;
    const int x = digits.digit(0);

    bool pure_power = true;
    for (std::size_t i = 1; i < digits.size(); ++i) {
      if (digits.digit(i) != 0) {
        pure_power = false;
        break;
      }
    }
    if (pure_power) {
      // Closed form A(x b^l) = (2x-1) (2b-1)^l terminates the recursion.
      result[static_cast<int>(digits.size()) - 1] = 2 * x - 1;
    } else {
      const int z = digits.digit(1);
      const unsigned ell = static_cast<unsigned>(digits.size()) - 1;
      std::vector<std::uint8_t> tail(digits.digits().begin() + 2, digits.digits().end());
      Int r = val(Word(base_, tail));
      Int with_x = Int(x) * int_pow(Int(b), ell - 1) + r;
      const int top = static_cast<int>(ell) - 1;
      if (z == 0) {
        result[top] = Int(2 * b - 2) * (2 * x - 1);
        add_scaled(result, expand(with_x), 1);
        add_scaled(result, expand(r), 1);
      } else if (z == x) {
        result[top] = 4 * x * b - 2 * x - 2 * b + 2;
        add_scaled(result, expand(with_x), 2);
        add_scaled(result, expand(r), -1);
      } else {
        Int with_z = Int(z) * int_pow(Int(b), ell - 1) + r;
        result[top] = (z < x) ? (4 * x * b - 4 * x - 2 * b + 3) : (4 * x * b - 4 * x - 2 * b + 2);
        add_scaled(result, expand(with_x), 1);
        add_scaled(result, expand(with_z), 2);
        add_scaled(result, expand(r), -2);
      }
    }
    memo_.emplace(n, result);
    return result;
  }

  Base base_;
  std::map<Int, PowerVector> memo_;
};

}  // namespace

Int Decomposition::reconstruct() const {
  const Int unit(2 * base.value() - 1);
  Int sum(0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += d[i] * int_pow(unit, static_cast<unsigned>(ell) - static_cast<unsigned>(i));
  }
  return sum;
}

Decomposition decompose(Base base, const Int& n) {
  const int b = base.value();
  if (n < b) throw std::domain_error("decomposition is defined for n >= b");

  DecompositionBuilder builder(base);
  PowerVector coeffs = builder.run(n);

  const int ell = static_cast<int>(rep(base, n).size()) - 2;
  // A pure power tops out one position above the stated range; fold it down.
  while (!coeffs.empty()) {
    auto last = std::prev(coeffs.end());
    if (last->first <= ell) break;
    Int carried = last->second * (2 * b - 1);
    const int power = last->first;
    coeffs.erase(last);
    coeffs[power - 1] += carried;
  }

  Decomposition out{base, n, ell, std::vector<Int>(static_cast<std::size_t>(ell) + 1)};
  for (const auto& [power, coeff] : coeffs) {
    out.d[static_cast<std::size_t>(ell - power)] = coeff;
  }
  return out;
}

std::string to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["base"] = d.base.value();
  j["n"] = d.n.str();
  j["ell"] = d.ell;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Int& v : d.d) arr.push_back(v.str());
  j["d"] = std::move(arr);
  return j.dump(2);
}

MultiplicativityReport check_multiplicativity(Base base, const Int& n_max) {
  SummatoryEvaluator evaluator(base);
  MultiplicativityReport report;
  const Int unit(2 * base.value() - 1);
  for (Int n(0); n <= n_max; ++n) {
    if (evaluator.value(n * base.value()) != unit * evaluator.value(n)) {
      report.ok = false;
      report.first_failure = n;
      break;
    }
  }
  return report;
}

}  // namespace subwords
