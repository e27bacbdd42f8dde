#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "subwords/summatory.hpp"
#include "subwords/verify.hpp"

using subwords::Base;
using subwords::Int;

TEST_CASE("summatory oracle matches the printed prefix") {
  const std::vector<int> expected = {0,  1,  3,  5,  8,  11, 15, 18,
                                     22, 25, 29, 34, 40, 45, 49, 55};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(subwords::a_oracle(Base(3), Int(n)) == expected[n]);
  }
  CHECK(subwords::a_oracle(Base(3), Int(150)) == 1665);
  CHECK(subwords::a_oracle(Base(7), Int(0)) == 0);
}

TEST_CASE("oracle budget") {
  CHECK_THROWS_AS(subwords::a_oracle(Base(2), Int(subwords::kSummatoryOracleBudget) + 1),
                  std::domain_error);
}

TEST_CASE("closed form for pure leading digits") {
  CHECK(subwords::a_closed_form_pure(Base(3), 1, 1) == 5);   // value at 3
  CHECK(subwords::a_closed_form_pure(Base(3), 2, 1) == 15);  // value at 6
  CHECK(subwords::a_closed_form_pure(Base(5), 1, 0) == 1);
  CHECK_THROWS_AS(subwords::a_closed_form_pure(Base(3), 3, 1), std::domain_error);
  CHECK_THROWS_AS(subwords::a_closed_form_pure(Base(3), 0, 1), std::domain_error);
}

TEST_CASE("closed form for two leading digits") {
  CHECK(subwords::a_closed_form_mixed(Base(3), 1, 2, 1) == 11);  // value at 5
  CHECK(subwords::a_closed_form_mixed(Base(3), 1, 1, 1) == 8);   // value at 4
  CHECK(subwords::a_closed_form_mixed(Base(3), 2, 1, 1) == 18);  // value at 7
  CHECK_THROWS_AS(subwords::a_closed_form_mixed(Base(3), 1, 3, 1), std::domain_error);
  CHECK_THROWS_AS(subwords::a_closed_form_mixed(Base(3), 1, 1, 0), std::domain_error);
}

TEST_CASE("closed forms agree with the oracle on their range") {
  for (int b : {2, 3, 4}) {
    const auto result = subwords::verify::check_summatory_closed_forms(Base(b), 4000);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("fast evaluation equals the oracle") {
  CHECK(subwords::a_fast(Base(3), Int(150)) == 1665);
  for (int b : {2, 3, 4}) {
    subwords::SummatoryEvaluator evaluator{Base(b)};
    Int run(0);
    for (int n = 0; n < 2500; ++n) {
      CHECK(evaluator.value(Int(n)) == run);
      run += subwords::count_canonical_subwords(subwords::rep(Base(b), Int(n)));
    }
  }
}

TEST_CASE("fast evaluation consistent with the pure closed form at scale") {
  for (int b : {2, 3, 5}) {
    subwords::SummatoryEvaluator evaluator{Base(b)};
    for (int x = 1; x < b; ++x) {
      for (int ell = 0; ell <= 20; ++ell) {
        const Int arg = Int(x) * subwords::int_pow(Int(b), static_cast<unsigned>(ell));
        CHECK(evaluator.value(arg) == subwords::a_closed_form_pure(Base(b), x, ell));
      }
    }
  }
}

TEST_CASE("displayed recurrences hold verbatim with inclusive remainders") {
  for (int b : {2, 3, 4}) {
    const auto result = subwords::verify::check_summatory_recurrences(Base(b), 6);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("decomposition of the worked value") {
  // Derived by running the displayed recurrences by hand from 150 down to
  // the closed-form terminals; reconstruction gives 1665 either way.
  const auto dec = subwords::decompose(Base(3), Int(150));
  CHECK(dec.ell == 3);
  CHECK(dec.d == std::vector<Int>{4, 32, 73, 0});
  CHECK(dec.reconstruct() == 1665);
  CHECK(dec.d[0] != 0);
}

TEST_CASE("decomposition of small and pure-power arguments") {
  CHECK_THROWS_AS(subwords::decompose(Base(3), Int(2)), std::domain_error);

  const auto nine = subwords::decompose(Base(3), Int(9));
  CHECK(nine.ell == 1);
  CHECK(nine.d.size() == 2);
  CHECK(nine.reconstruct() == 25);
  CHECK(nine.d[0] == 5);
  CHECK(nine.d[1] == 0);

  const auto three = subwords::decompose(Base(3), Int(3));
  CHECK(three.ell == 0);
  CHECK(three.reconstruct() == 5);
}

TEST_CASE("decomposition reconstruction on random arguments") {
  std::mt19937_64 rng(97);
  for (int b : {2, 3, 5}) {
    subwords::SummatoryEvaluator evaluator{Base(b)};
    for (int i = 0; i < 100; ++i) {
      Int n(rng());
      if (n < b) n += b;
      const auto dec = subwords::decompose(Base(b), n);
      CHECK(dec.reconstruct() == evaluator.value(n));
      CHECK(static_cast<int>(dec.d.size()) == dec.ell + 1);
    }
  }
}

TEST_CASE("multiplicativity sweeps") {
  CHECK(subwords::check_multiplicativity(Base(3), Int(10000)).ok);
  CHECK(subwords::check_multiplicativity(Base(2), Int(10000)).ok);
  CHECK(subwords::check_multiplicativity(Base(5), Int(3000)).ok);
  // the zero case explicitly
  CHECK(subwords::a_fast(Base(4), Int(0)) == 0);
}

TEST_CASE("strict monotonicity") {
  const auto result = subwords::verify::check_monotonicity(Base(3), 5000);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("decomposition json schema") {
  const auto dec = subwords::decompose(Base(3), Int(150));
  const auto parsed = nlohmann::json::parse(subwords::to_json(dec));
  CHECK(parsed["base"] == 3);
  CHECK(parsed["n"] == "150");
  CHECK(parsed["ell"] == 3);
  REQUIRE(parsed["d"].size() == 4);
  CHECK(parsed["d"][0] == "4");
}
