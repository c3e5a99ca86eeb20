#include "dsq/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dsq/figures.hpp"
#include "dsq/report.hpp"
#include "dsq/search.hpp"
#include "dsq/verify.hpp"

namespace dsq {

namespace {

struct AnalyzeArgs {
  std::string format = "text";
  std::size_t max_len = 100000;
  std::string input = "-";
};

struct VerifyArgs {
  std::size_t max_len = 0;
  std::size_t alphabet = 0;
  std::string suite;
  std::size_t jobs = 0;
  std::string resume;
};

struct SearchArgs {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t jobs = 0;
  std::string resume;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

ShardOptions shard_options(std::size_t jobs, const std::string& resume) {
  ShardOptions o;
  o.jobs = jobs;
  if (!resume.empty()) o.resume_path = resume;
  return o;
}

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out,
                std::ostream& err, bool color) {
  std::ifstream file;
  std::istream* src = &in;
  if (a.input != "-") {
    file.open(a.input);
    if (!file) {
      err << "error: cannot read " << a.input << '\n';
      return exit_usage;
    }
    src = &file;
  }

  std::vector<Word> words;
  std::string line;
  for (std::size_t lineno = 1; std::getline(*src, line); ++lineno) {
    const std::string w = trim(line);
    if (w.empty()) continue;
    if (!is_valid_symbols(w)) {
      err << "error: line " << lineno << ": invalid character (expected a-z)\n";
      return exit_usage;
    }
    if (w.size() > a.max_len) {
      err << "error: line " << lineno << ": word of length " << w.size()
          << " exceeds --max-len " << a.max_len << '\n';
      return exit_usage;
    }
    words.emplace_back(w);
  }
  if (src->bad()) {
    err << "error: read failure\n";
    return exit_usage;
  }

  bool falsified = false;
  for (const auto& w : words) {
    const AnalysisReport r = analyze(w);
    if (!r.bounds.all_pass()) falsified = true;
    if (a.format == "json") {
      out << to_json(r).dump() << '\n';
    } else {
      out << render_text(r, color);
    }
  }
  return falsified ? exit_falsified : exit_ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suite;
  VerifyResult r;
  try {
    suite = parse_suite(a.suite);
    r = exhaustive_verify(a.max_len, a.alphabet, suite,
                          shard_options(a.jobs, a.resume));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  out << "verified " << r.words << " words, length <= " << a.max_len
      << ", alphabet <= " << a.alphabet << '\n';
  for (const auto& p : r.properties) {
    out << "  " << std::left << std::setw(24) << p.name << " checked "
        << std::setw(10) << p.checked << " violations " << std::setw(6)
        << p.violations << (p.violations == 0 ? "PASS" : "FAIL") << '\n';
  }
  if (r.shortest_fs_length) {
    out << "shortest word with an FS-double square: " << *r.shortest_fs_length
        << '\n';
  } else {
    out << "no FS-double square in range\n";
  }
  if (r.clause_overlaps > 0) {
    out << "pairs matching more than one mate clause: " << r.clause_overlaps << '\n';
  }
  if (r.beta_exponent_one > 0) {
    out << "pairs with the beta shape at exponent 1: " << r.beta_exponent_one << '\n';
  }
  for (const auto& c : r.certificates) {
    out << "counterexample " << c.property << ": " << c.word << " (" << c.witness
        << ")\n";
  }
  return r.ok() ? exit_ok : exit_falsified;
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const SearchResult r = sigma_search(a.d, a.n, shard_options(a.jobs, a.resume));
    out << to_json(r).dump(2) << '\n';
    return exit_ok;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_usage;
}

int cmd_figures(std::ostream& out, bool color) {
  bool all_pass = true;
  for (int n = 1; n <= figure_count; ++n) {
    if (n > 1) out << '\n';
    out << render_figure(n, color);
    for (const auto& c : figure_checks(n)) {
      all_pass = all_pass && c.pass;
      out << "  " << c.name << ": " << c.observed;
      if (c.pass) {
        out << " ok\n";
      } else {
        out << " FAIL (expected " << c.expected << ")\n";
      }
    }
  }
  return all_pass ? exit_ok : exit_falsified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Double squares: analysis, exhaustive verification and search"};
  app.name("dsquares");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Report squares, FS-double squares, mates, family and bounds per word");
  analyze->add_option("--format", analyze_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--max-len", analyze_args.max_len, "Reject longer words")
      ->check(CLI::PositiveNumber);
  analyze->add_option("input", analyze_args.input, "File with one word per line, or - for stdin");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check properties over all canonical words");
  verify->add_option("--max-len", verify_args.max_len, "Longest word length")->required();
  verify->add_option("--alphabet", verify_args.alphabet, "Alphabet size")->required();
  verify->add_option("--suite", verify_args.suite, "Comma separated properties, or all")
      ->required();
  verify->add_option("--jobs", verify_args.jobs, "Worker threads (default: logical processors)");
  verify->add_option("--resume", verify_args.resume, "Cursor file for resuming");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Maximum number of distinct primitively rooted squares");
  search->add_option("--d", search_args.d, "Number of distinct symbols")->required();
  search->add_option("--n", search_args.n, "Word length")->required();
  search->add_option("--jobs", search_args.jobs, "Worker threads (default: logical processors)");
  search->add_option("--resume", search_args.resume, "Cursor file for resuming");

  auto* figures = app.add_subcommand("figures", "Render the four reference configurations and check their counts");

  std::vector<std::string> argv_store{"dsquares"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (analyze->parsed()) return cmd_analyze(analyze_args, in, out, err, color);
  if (verify->parsed()) return cmd_verify(verify_args, out, err);
  if (search->parsed()) return cmd_search(search_args, out, err);
  if (figures->parsed()) return cmd_figures(out, color);
  return exit_usage;
}

}  // namespace dsq
