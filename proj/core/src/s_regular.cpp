#include "subwords/s_regular.hpp"

#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace subwords {

Int s_oracle(Base base, const Int& n) {
  return count_canonical_subwords(rep(base, n));
}

namespace {

/// Shared digit-string evaluator for the three recurrences. Subproblems are
/// the words c . d[j..) for a nonzero leading digit c, plus the normalized
/// suffixes d[j..) with leading zeroes stripped.
class RecurrenceTable {
 public:
  RecurrenceTable(Base base, const Word& digits)
      : b_(base.value()),
        d_(digits.digits()),
        memo_(static_cast<std::size_t>(b_) * (d_.size() + 1)) {}

  Int eval() {
    if (d_.empty()) return Int(1);
    return word_value(d_[0], 1);
  }

 private:
  // S of the word c . d[j..).
  const Int& word_value(int c, std::size_t j) {
    Int& slot = memo_[static_cast<std::size_t>(c) * (d_.size() + 1) + j];
    if (slot != 0) return slot;
    if (j == d_.size()) {
      slot = 2;  // single nonzero digit
      return slot;
    }
    const int z = d_[j];
    if (z == 0) {
      slot = word_value(c, j + 1) + suffix_value(j + 1);
    } else if (z == c) {
      slot = 2 * word_value(c, j + 1) - suffix_value(j + 1);
    } else {
      slot = word_value(c, j + 1) + 2 * word_value(z, j + 1) - 2 * suffix_value(j + 1);
    }
    return slot;
  }

  // S of d[j..) with leading zeroes stripped.
  Int suffix_value(std::size_t j) {
    while (j < d_.size() && d_[j] == 0) ++j;
    if (j == d_.size()) return Int(1);  // S(0)
    return word_value(d_[j], j + 1);
  }

  int b_;
  const std::vector<std::uint8_t>& d_;
  std::vector<Int> memo_;  // 0 marks "unset": every S value is positive
};

}  // namespace

Int s_recurrence(Base base, const Int& n) {
  const Word digits = rep(base, n);
  RecurrenceTable table(base, digits);
  return table.eval();
}

RegularityCoefficients solve_coefficients(Base base) {
  const int b = base.value();
  const std::size_t bb = static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  std::vector<Int> s(static_cast<std::size_t>(b) * bb);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = s_oracle(base, Int(n));

  RegularityCoefficients out{base, {}, {}};
  out.a.resize(bb);
  out.c.assign(bb, std::vector<Int>(static_cast<std::size_t>(b - 1)));
  for (std::size_t r = 0; r < bb; ++r) {
    Int a = 3 * s[r];
    for (int j = 1; j <= b - 2; ++j) {
      a += 2 * s[static_cast<std::size_t>(j) * bb + r];
    }
    a -= (2 * b - 3) * s[static_cast<std::size_t>(b - 1) * bb + r];
    out.a[r] = a;
    out.c[r][0] = -2 * s[r] + s[static_cast<std::size_t>(b - 1) * bb + r];
    for (int sidx = 1; sidx <= b - 2; ++sidx) {
      out.c[r][static_cast<std::size_t>(sidx)] =
          -s[static_cast<std::size_t>(sidx) * bb + r] + s[static_cast<std::size_t>(b - 1) * bb + r];
    }
  }
  return out;
}

std::vector<Int> LinearRepresentation::state(const Int& n) const {
  if (n == 0) return v0;
  const Word digits = rep(base, n);
  std::vector<Int> v = v0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    v = mu[static_cast<std::size_t>(digits.digit(i))].apply(v);
  }
  return v;
}

LinearRepresentation build_linear_representation(Base base) {
  const int b = base.value();
  const RegularityCoefficients coeffs = solve_coefficients(base);
  const std::size_t dim = static_cast<std::size_t>(b);

  LinearRepresentation rep{base, {}, {}};
  rep.v0.assign(dim, Int(2));
  rep.v0[0] = 1;
  rep.v0[1] = 1;

  for (int s = 0; s < b; ++s) {
    IntMatrix m(dim, dim);
    if (s <= b - 2) {
      // V(bn+s) first coordinate is S(bn+s), a plain coordinate of V(n).
      m.at(0, static_cast<std::size_t>(s) + 1) = 1;
    } else {
      // S(bn + b - 1) = (2b-1) S(n) - sum_{s<b-1} S(bn+s).
      m.at(0, 0) = 2 * b - 1;
      for (std::size_t j = 1; j < dim; ++j) m.at(0, j) = -1;
    }
    for (int t = 0; t <= b - 2; ++t) {
      const std::size_t r = static_cast<std::size_t>(b) * static_cast<std::size_t>(s) +
                            static_cast<std::size_t>(t);
      m.at(static_cast<std::size_t>(t) + 1, 0) = coeffs.a[r];
      for (int u = 0; u <= b - 2; ++u) {
        m.at(static_cast<std::size_t>(t) + 1, static_cast<std::size_t>(u) + 1) =
            coeffs.c[r][static_cast<std::size_t>(u)];
      }
    }
    rep.mu.push_back(std::move(m));
  }
  return rep;
}

Int s_fast(const LinearRepresentation& rep, const Int& n) {
  return rep.state(n)[0];
}

Int s_fast(Base base, const Int& n) {
  return s_fast(build_linear_representation(base), n);
}

std::vector<Int> s_table(const LinearRepresentation& rep, std::size_t count) {
  const std::size_t b = static_cast<std::size_t>(rep.base.value());
  std::vector<Int> table(count);
  if (count == 0) return table;

  const std::size_t state_count = (count + b - 1) / b;
  std::vector<std::vector<Int>> v(state_count);
  if (state_count > 0) v[0] = rep.v0;
  for (std::size_t m = 1; m < state_count; ++m) {
    v[m] = rep.mu[m % b].apply(v[m / b]);
  }
  for (std::size_t n = 0; n < count; ++n) {
    if (n < state_count) {
      table[n] = v[n][0];
    } else {
      // Only the leading coordinate of mu(n % b) V(n / b) is needed.
      const IntMatrix& m = rep.mu[n % b];
      const std::vector<Int>& parent = v[n / b];
      Int acc(0);
      for (std::size_t j = 0; j < b; ++j) acc += m.at(0, j) * parent[j];
      table[n] = std::move(acc);
    }
  }
  return table;
}

std::string RegularityReport::summary() const {
  std::ostringstream out;
  out << (relation_ok ? "two-digit relation: ok" : "two-digit relation: FAILED")
      << ", " << (reduction_ok ? "last-digit reduction: ok" : "last-digit reduction: FAILED")
      << ", " << (redundancy_ok ? "dependent rows certified" : "dependent rows NOT certified");
  if (!ok && first_failure_n >= 0) {
    out << "; first failure at n=" << first_failure_n.str();
    if (first_failure_r >= 0) out << ", r=" << first_failure_r;
  }
  return out.str();
}

RegularityReport verify_regularity(Base base, const Int& n_max) {
  const int b = base.value();
  const std::size_t bb = static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  const LinearRepresentation rep = build_linear_representation(base);
  const RegularityCoefficients coeffs = solve_coefficients(base);

  RegularityReport report;
  const std::size_t limit = static_cast<std::size_t>(n_max) + 1;
  const std::vector<Int> s = s_table(rep, limit * bb + bb);

  for (std::size_t n = 0; n < limit && report.relation_ok; ++n) {
    for (std::size_t r = 0; r < bb; ++r) {
      Int expected = coeffs.a[r] * s[n];
      for (int u = 0; u <= b - 2; ++u) {
        expected += coeffs.c[r][static_cast<std::size_t>(u)] *
                    s[n * static_cast<std::size_t>(b) + static_cast<std::size_t>(u)];
      }
      if (expected != s[n * bb + r]) {
        report.relation_ok = false;
        report.first_failure_n = Int(n);
        report.first_failure_r = static_cast<int>(r);
        break;
      }
    }
  }
  for (std::size_t n = 0; n < limit && report.reduction_ok; ++n) {
    Int expected = (2 * b - 1) * s[n];
    for (int u = 0; u <= b - 2; ++u) {
      expected -= s[n * static_cast<std::size_t>(b) + static_cast<std::size_t>(u)];
    }
    if (expected != s[n * static_cast<std::size_t>(b) + static_cast<std::size_t>(b - 1)]) {
      report.reduction_ok = false;
      if (report.first_failure_n < 0) report.first_failure_n = Int(n);
    }
  }

  // Rows r = b r' + (b-1) follow from the others:
  //   row[r] = (2b-1) * gen(r') - sum_{s<b-1} row[b r' + s]
  // where gen(r') is the coordinate selector for r' < b-1 and the reduction
  // row (2b-1, -1, ..., -1) for r' = b-1.
  for (int rp = 0; rp < b && report.redundancy_ok; ++rp) {
    std::vector<Int> expected(static_cast<std::size_t>(b), Int(0));
    if (rp <= b - 2) {
      expected[static_cast<std::size_t>(rp) + 1] = 2 * b - 1;
    } else {
      expected[0] = Int(2 * b - 1) * (2 * b - 1);
      for (std::size_t j = 1; j < static_cast<std::size_t>(b); ++j) expected[j] = -(2 * b - 1);
    }
    for (int s_idx = 0; s_idx <= b - 2; ++s_idx) {
      const std::size_t r = static_cast<std::size_t>(b * rp + s_idx);
      expected[0] -= coeffs.a[r];
      for (int u = 0; u <= b - 2; ++u) {
        expected[static_cast<std::size_t>(u) + 1] -= coeffs.c[r][static_cast<std::size_t>(u)];
      }
    }
    const std::size_t r = static_cast<std::size_t>(b * rp + b - 1);
    if (expected[0] != coeffs.a[r]) report.redundancy_ok = false;
    for (int u = 0; u <= b - 2 && report.redundancy_ok; ++u) {
      if (expected[static_cast<std::size_t>(u) + 1] != coeffs.c[r][static_cast<std::size_t>(u)]) {
        report.redundancy_ok = false;
      }
    }
  }

  report.ok = report.relation_ok && report.reduction_ok && report.redundancy_ok;
  return report;
}

bool palindrome_check(Base base, int ell) {
  if (ell < 1) throw std::domain_error("palindrome check expects ell >= 1");
  const int b = base.value();
  const LinearRepresentation rep = build_linear_representation(base);
  const Int block = int_pow(Int(b), static_cast<unsigned>(ell));
  const Int offset = (b - 1) * block;
  const std::size_t count = static_cast<std::size_t>(offset + block);
  const std::vector<Int> s = s_table(rep, count);
  const std::size_t base_index = static_cast<std::size_t>(offset);
  const std::size_t len = static_cast<std::size_t>(block);
  for (std::size_t r = 0; r < len; ++r) {
    if (s[base_index + r] != s[base_index + (len - 1 - r)]) return false;
  }
  return true;
}

IntMatrix regularity_system_matrix(Base base) {
  const int b = base.value();
  const std::size_t bb = static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  const std::size_t dim = static_cast<std::size_t>(b) * bb;
  IntMatrix m(dim, dim);
  // Block row n, block columns: S(n) I, then S(bn+s) I for s = 0..b-2, with
  // the initial values S(0) = 1, S(x) = 2, S(x0) = 3, S(xx) = 3, S(xy) = 4.
  auto s_initial = [b](int n) -> int {
    if (n == 0) return 1;
    if (n < b) return 2;
    const int hi = n / b, lo = n % b;
    if (lo == 0) return 3;
    return hi == lo ? 3 : 4;
  };
  for (int n = 0; n < b; ++n) {
    for (int col = 0; col < b; ++col) {
      const int value = (col == 0) ? s_initial(n) : s_initial(n * b + (col - 1));
      for (std::size_t k = 0; k < bb; ++k) {
        m.at(static_cast<std::size_t>(n) * bb + k, static_cast<std::size_t>(col) * bb + k) = value;
      }
    }
  }
  return m;
}

IntMatrix regularity_system_inverse(Base base) {
  const int b = base.value();
  const std::size_t bb = static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  const std::size_t dim = static_cast<std::size_t>(b) * bb;
  IntMatrix m(dim, dim);
  auto put_block = [&](int row, int col, int value) {
    for (std::size_t k = 0; k < bb; ++k) {
      m.at(static_cast<std::size_t>(row) * bb + k, static_cast<std::size_t>(col) * bb + k) = value;
    }
  };
  // Row 0: (3, 2, ..., 2, -(2b-3)); row 1: (-2, 0, ..., 0, 1);
  // row j >= 2: -1 at column j-1 and 1 at the last column.
  put_block(0, 0, 3);
  for (int col = 1; col <= b - 2; ++col) put_block(0, col, 2);
  put_block(0, b - 1, -(2 * b - 3));
  put_block(1, 0, -2);
  put_block(1, b - 1, 1);
  for (int row = 2; row < b; ++row) {
    put_block(row, row - 1, -1);
    put_block(row, b - 1, 1);
  }
  return m;
}

std::string regularity_json(const RegularityCoefficients& coeffs,
                            const LinearRepresentation& rep) {
  nlohmann::ordered_json j;
  j["base"] = coeffs.base.value();
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& v : coeffs.a) a.push_back(v.str());
  j["a"] = std::move(a);
  nlohmann::ordered_json c = nlohmann::ordered_json::array();
  for (const auto& row : coeffs.c) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Int& v : row) jrow.push_back(v.str());
    c.push_back(std::move(jrow));
  }
  j["c"] = std::move(c);
  nlohmann::ordered_json mu = nlohmann::ordered_json::array();
  for (const IntMatrix& m : rep.mu) {
    nlohmann::ordered_json jm = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
      for (std::size_t col = 0; col < m.cols(); ++col) jrow.push_back(m.at(r, col).str());
      jm.push_back(std::move(jrow));
    }
    mu.push_back(std::move(jm));
  }
  j["mu"] = std::move(mu);
  nlohmann::ordered_json v0 = nlohmann::ordered_json::array();
  for (const Int& v : rep.v0) v0.push_back(v.str());
  j["v0"] = std::move(v0);
  return j.dump(2);
}

}  // namespace subwords
