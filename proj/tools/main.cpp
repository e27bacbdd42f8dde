// Command-line front end: evaluates the subword-count sequence and its
// summatory function, exports coefficients and matrices, renders the
// generalized Pascal triangle, samples the limit fluctuation and runs the
// property-verification suite.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subwords/asymptotics.hpp"
#include "subwords/pascal.hpp"
#include "subwords/s_regular.hpp"
#include "subwords/summatory.hpp"
#include "subwords/trie.hpp"
#include "subwords/verify.hpp"
#include "subwords/words.hpp"

namespace {

using subwords::Base;
using subwords::Int;
using subwords::Word;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("numbers", "malformed integer '" + text + "'");
  }
}

/// Expands "A..B" range arguments into individual values.
std::vector<Int> expand_arguments(const std::vector<std::string>& args) {
  std::vector<Int> values;
  for (const std::string& arg : args) {
    const std::size_t dots = arg.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_int(arg));
      continue;
    }
    const Int lo = parse_int(arg.substr(0, dots));
    const Int hi = parse_int(arg.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("numbers", "empty range '" + arg + "'");
    for (Int v = lo; v <= hi; ++v) values.push_back(v);
  }
  return values;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

void write_output(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  if (path.empty()) {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::string join_values(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += values[i].str();
  }
  out += '\n';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattered-subword statistics of base-b expansions"};
  app.require_subcommand(1);

  int base_flag = 0;
  std::vector<std::string> number_args;
  std::string out_path;
  std::string format = "text";
  std::string word_text;
  int rows = 27;
  int cap = 2;
  int level = 12;
  int resolution = 512;
  std::uint64_t verify_max = 0;

  auto add_base = [&base_flag](CLI::App* cmd) {
    cmd->add_option("--base", base_flag, "number base (>= 2)")->required();
  };

  CLI::App* sb = app.add_subcommand("sb", "subword-count sequence values");
  add_base(sb);
  sb->add_option("numbers", number_args, "indices or A..B ranges")->required();

  CLI::App* ab = app.add_subcommand("ab", "summatory function values");
  add_base(ab);
  ab->add_option("numbers", number_args, "indices or A..B ranges")->required();

  CLI::App* dec = app.add_subcommand("decompose", "coefficient word of the summatory value");
  add_base(dec);
  dec->add_option("numbers", number_args, "index n >= base")->required();
  dec->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  dec->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "recurrence coefficients as JSON");
  add_base(coeffs);
  coeffs->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* matrices = app.add_subcommand("matrices", "digit matrices as JSON");
  add_base(matrices);
  matrices->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* triangle = app.add_subcommand("triangle", "render the triangle as a PGM image");
  add_base(triangle);
  triangle->add_option("--rows", rows, "row count")->required();
  triangle->add_option("--cap", cap, "clip level (default 2)");
  triangle->add_option("--out", out_path, "output file")->required();

  CLI::App* profile = app.add_subcommand("profile", "positive entries per row as CSV");
  add_base(profile);
  profile->add_option("--rows", rows, "row count")->required();
  profile->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* hb = app.add_subcommand("hb-sample", "sample the limit fluctuation over one period");
  add_base(hb);
  hb->add_option("--n", level, "approximation level (default 12)");
  hb->add_option("--res", resolution, "grid resolution (default 512)");
  hb->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* trie = app.add_subcommand("trie", "subword trie of a word");
  add_base(trie);
  trie->add_option("--word", word_text, "digit word, canonical")->required();
  trie->add_option("--format", format, "levels|dot")->check(CLI::IsMember({"text", "levels", "dot"}));
  trie->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the property-verification suite");
  add_base(verify);
  verify->add_option("--max", verify_max, "sweep bound override (default per check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Base base(base_flag);

    if (sb->parsed()) {
      const subwords::LinearRepresentation rep = subwords::build_linear_representation(base);
      std::vector<Int> values;
      for (const Int& n : expand_arguments(number_args)) {
        values.push_back(subwords::s_fast(rep, n));
      }
      std::cout << join_values(values);
      return kExitOk;
    }

    if (ab->parsed()) {
      subwords::SummatoryEvaluator evaluator(base);
      std::vector<Int> values;
      for (const Int& n : expand_arguments(number_args)) {
        values.push_back(evaluator.value(n));
      }
      std::cout << join_values(values);
      return kExitOk;
    }

    if (dec->parsed()) {
      const std::vector<Int> numbers = expand_arguments(number_args);
      std::string out;
      for (const Int& n : numbers) {
        const subwords::Decomposition d = subwords::decompose(base, n);
        if (format == "json") {
          out += subwords::to_json(d);
          out += '\n';
        } else {
          out += join_values(d.d);
        }
      }
      write_output(out_path, out);
      return kExitOk;
    }

    if (coeffs->parsed() || matrices->parsed()) {
      const subwords::RegularityCoefficients c = subwords::solve_coefficients(base);
      const subwords::LinearRepresentation rep = subwords::build_linear_representation(base);
      write_output(out_path, subwords::regularity_json(c, rep) + "\n");
      return kExitOk;
    }

    if (triangle->parsed()) {
      write_output(out_path, subwords::render_triangle(base, rows, cap));
      return kExitOk;
    }

    if (profile->parsed()) {
      write_output(out_path, subwords::profile_csv(subwords::compressed_profile(base, rows)));
      return kExitOk;
    }

    if (hb->parsed()) {
      write_output(out_path, subwords::sample_h_csv(subwords::sample_h(base, level, resolution)));
      return kExitOk;
    }

    if (trie->parsed()) {
      const Word w = Word::parse(base, word_text);
      const subwords::SubwordTrie t = subwords::build_trie(w);
      if (format == "dot") {
        write_output(out_path, subwords::to_dot(t));
      } else {
        std::string out = "nodes " + t.node_count().str() + "\n";
        const std::vector<Int> levels = t.level_counts();
        out += "levels";
        for (const Int& c : levels) out += " " + c.str();
        out += "\n";
        write_output(out_path, out);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const std::uint64_t sweep = verify_max == 0 ? 100000 : verify_max;
      const auto results = subwords::verify::run_default_suite(base, sweep);
      bool all_ok = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail << ")\n";
        all_ok = all_ok && r.pass;
      }
      std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
      return all_ok ? kExitOk : kExitVerificationFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }

  return kExitUsage;
}
