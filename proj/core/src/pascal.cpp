#include "subwords/pascal.hpp"

#include <stdexcept>

namespace subwords {

Int triangle_entry(Base base, const Int& m, const Int& n) {
  return word_binomial(rep(base, m), rep(base, n));
}

Int row_positive_count(Base base, const Int& m) {
  const Word row_word = rep(base, m);
  Int count(0);
  for (Int n(0); n <= m; ++n) {
    if (word_binomial(row_word, rep(base, n)) > 0) ++count;
  }
  return count;
}

std::vector<std::uint8_t> render_triangle(Base base, int rows, int cap) {
  if (rows < 1) throw std::domain_error("triangle needs at least one row");
  if (cap < 1) throw std::domain_error("clip level must be positive");

  std::string header = "P5\n" + std::to_string(rows) + " " + std::to_string(rows) + "\n255\n";
  std::vector<std::uint8_t> image(header.begin(), header.end());
  image.reserve(image.size() + static_cast<std::size_t>(rows) * static_cast<std::size_t>(rows));

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) words.push_back(rep(base, Int(i)));

  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < rows; ++n) {
      int tone = 255;  // white above the diagonal and for zero entries
      if (n <= m) {
        const Int entry = word_binomial(words[static_cast<std::size_t>(m)],
                                        words[static_cast<std::size_t>(n)]);
        if (entry > 0) {
          const int clipped = entry >= cap ? cap : entry.convert_to<int>();
          tone = 255 - (clipped * 255) / cap;
        }
      }
      image.push_back(static_cast<std::uint8_t>(tone));
    }
  }
  return image;
}

std::vector<Int> compressed_profile(Base base, int rows) {
  if (rows < 1) throw std::domain_error("profile needs at least one row");
  std::vector<Int> profile;
  profile.reserve(static_cast<std::size_t>(rows));
  for (int m = 0; m < rows; ++m) profile.push_back(row_positive_count(base, Int(m)));
  return profile;
}

std::string profile_csv(const std::vector<Int>& profile) {
  std::string out = "m,count\n";
  for (std::size_t m = 0; m < profile.size(); ++m) {
    out += std::to_string(m);
    out += ',';
    out += profile[m].str();
    out += '\n';
  }
  return out;
}

}  // namespace subwords
