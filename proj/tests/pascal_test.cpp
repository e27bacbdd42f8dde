#include <doctest.h>

#include "subwords/pascal.hpp"
#include "subwords/s_regular.hpp"
#include "subwords/verify.hpp"

using subwords::Base;
using subwords::Int;

namespace {

struct Pgm {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

Pgm parse_pgm(const std::vector<std::uint8_t>& bytes) {
  // P5\n<w> <h>\n255\n<data>
  const std::string text(bytes.begin(), bytes.end());
  REQUIRE(text.rfind("P5\n", 0) == 0);
  std::size_t pos = 3;
  const std::size_t dims_end = text.find('\n', pos);
  const std::string dims = text.substr(pos, dims_end - pos);
  const std::size_t space = dims.find(' ');
  Pgm out;
  out.width = std::stoi(dims.substr(0, space));
  out.height = std::stoi(dims.substr(space + 1));
  const std::size_t max_end = text.find('\n', dims_end + 1);
  REQUIRE(text.substr(dims_end + 1, max_end - dims_end - 1) == "255");
  out.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(max_end) + 1, bytes.end());
  REQUIRE(out.pixels.size() ==
          static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height));
  return out;
}

}  // namespace

TEST_CASE("triangle entries") {
  CHECK(subwords::triangle_entry(Base(3), Int(16), Int(5)) == 1);
  CHECK(subwords::triangle_entry(Base(3), Int(16), Int(16)) == 1);
  CHECK(subwords::triangle_entry(Base(4), Int(37), Int(0)) == 1);
  // strictly lower-triangular support
  for (int m = 0; m < 40; ++m) {
    for (int n = m + 1; n < 44; ++n) {
      CHECK(subwords::triangle_entry(Base(3), Int(m), Int(n)) == 0);
    }
  }
}

TEST_CASE("row positive counts equal the sequence") {
  CHECK(subwords::row_positive_count(Base(3), Int(16)) == 7);
  CHECK(subwords::row_positive_count(Base(5), Int(0)) == 1);
  CHECK(subwords::row_positive_count(Base(3), Int(11)) == 6);
  for (int b : {2, 3}) {
    const auto result = subwords::verify::check_triangle_rows(Base(b), 200);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("embedded classical triangles") {
  for (int b : {2, 3, 4}) {
    const auto result = subwords::verify::check_embedded_binomials(Base(b), 12);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("rendering: header, tones and determinism") {
  const auto bytes = subwords::render_triangle(Base(3), 27, 2);
  const Pgm image = parse_pgm(bytes);
  CHECK(image.width == 27);
  CHECK(image.height == 27);
  // top-left cell holds the entry 1
  CHECK(image.pixels[0] == 128);
  // above-diagonal cells are white
  CHECK(image.pixels[1] == 255);
  CHECK(bytes == subwords::render_triangle(Base(3), 27, 2));

  const auto tiny = parse_pgm(subwords::render_triangle(Base(4), 1, 2));
  CHECK(tiny.width == 1);
  CHECK(tiny.pixels[0] == 128);

  CHECK_THROWS_AS(subwords::render_triangle(Base(3), 0, 2), std::domain_error);
}

TEST_CASE("threshold mask row sums reproduce the sequence") {
  const int rows = 32;
  const Pgm mask = parse_pgm(subwords::render_triangle(Base(2), rows, 1));
  for (int m = 0; m < rows; ++m) {
    int positive = 0;
    for (int n = 0; n < rows; ++n) {
      if (mask.pixels[static_cast<std::size_t>(m * rows + n)] == 0) ++positive;
    }
    CHECK(positive == subwords::s_oracle(Base(2), Int(m)).convert_to<int>());
  }
}

TEST_CASE("compressed profile") {
  const auto profile = subwords::compressed_profile(Base(3), 12);
  const std::vector<int> expected = {1, 2, 2, 3, 3, 4, 3, 4, 3, 4, 5, 6};
  REQUIRE(profile.size() == expected.size());
  for (std::size_t i = 0; i < profile.size(); ++i) CHECK(profile[i] == expected[i]);

  CHECK(subwords::compressed_profile(Base(5), 1) == std::vector<Int>{1});

  const auto p2 = subwords::compressed_profile(Base(2), 16);
  for (std::size_t m = 0; m < p2.size(); ++m) {
    CHECK(p2[m] == subwords::s_fast(Base(2), Int(m)));
  }

  const std::string csv = subwords::profile_csv(subwords::compressed_profile(Base(3), 3));
  CHECK(csv == "m,count\n0,1\n1,2\n2,2\n");
}
