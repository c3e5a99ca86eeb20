// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsq/bounds.hpp"
#include "dsq/doublesq.hpp"
#include "dsq/figures.hpp"
#include "dsq/search.hpp"
#include "dsq/verify.hpp"

namespace {

using dsq::VerifyResult;

int failures = 0;

void report(bool pass, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

const dsq::PropertyStats& stats(const VerifyResult& r, const std::string& name) {
  for (const auto& p : r.properties) {
    if (p.name == name) return p;
  }
  throw std::logic_error("property not run: " + name);
}

// Sums checked/violations of the named properties over several runs.
std::string tally(const std::vector<const VerifyResult*>& runs,
                  const std::vector<std::string>& names, bool& pass) {
  std::string out;
  pass = true;
  for (const auto& name : names) {
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (const auto* r : runs) {
      checked += stats(*r, name).checked;
      violations += stats(*r, name).violations;
    }
    if (violations > 0) pass = false;
    if (!out.empty()) out += "; ";
    out += name + " " + std::to_string(checked) + " checked, " +
           std::to_string(violations) + " violations";
  }
  return out;
}

void first_certificates(const std::vector<const VerifyResult*>& runs,
                        const std::vector<std::string>& names) {
  for (const auto* r : runs) {
    for (const auto& c : r->certificates) {
      for (const auto& n : names) {
        if (c.property == n) {
          std::printf("  counterexample %s: %s (%s)\n", c.property.c_str(),
                      c.word.c_str(), c.witness.c_str());
        }
      }
    }
  }
}

void criterion(const std::string& title,
               const std::vector<const VerifyResult*>& runs,
               const std::vector<std::string>& names) {
  bool pass = false;
  const std::string detail = tally(runs, names, pass);
  report(pass, title, detail);
  if (!pass) first_certificates(runs, names);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool figure_passes(int n, std::string& detail) {
  bool pass = true;
  for (const auto& c : dsq::figure_checks(n)) {
    if (!c.pass) {
      pass = false;
      detail += " [" + c.name + ": " + c.observed + ", expected " + c.expected + "]";
    }
  }
  return pass;
}

}  // namespace

int main() {
  const std::vector<std::string> corpus_suite{
      "two_rightmost_max", "inversion_factor_lemma", "factorization",
      "mate_taxonomy",     "delta_bound",            "distinct_bound",
      "nonprimitive_bound", "strengthened_bound"};

  const auto t0 = std::chrono::steady_clock::now();
  const VerifyResult ternary = dsq::exhaustive_verify(14, 3, corpus_suite);
  const VerifyResult binary = dsq::exhaustive_verify(16, 2, corpus_suite);
  const std::vector<const VerifyResult*> corpus{&ternary, &binary};
  std::printf("corpus: %zu words (alphabet <= 3, length <= 14) + %zu words "
              "(alphabet 2, length <= 16) in %.1f s\n",
              ternary.words, binary.words, seconds_since(t0));

  criterion("two rightmost squares per position", corpus, {"two_rightmost_max"});
  criterion("inversion factor positions equal the intervals", corpus,
            {"inversion_factor_lemma"});

  {
    std::string detail;
    const bool pass = figure_passes(1, detail);
    report(pass, "figure 1 reproduction",
           "lcp 3, lcs 0, natural inversion factor aaaaabaaabaa, positions "
           "23-26 and 63-66" + detail);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    for (int n = 2; n <= 4; ++n) pass = figure_passes(n, detail) && pass;
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 1.0;
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "family sizes 4 and 4, 1 alpha + 2 beta segments, %.3f s", elapsed);
    report(pass, "figures 2-4 reproduction", buf + detail);
  }

  criterion("bound suite", corpus,
            {"delta_bound", "distinct_bound", "nonprimitive_bound"});
  criterion("strengthened invariant 6*delta <= 5n - 2|u|", corpus,
            {"strengthened_bound"});
  criterion("factorization uniqueness and reassembly", corpus, {"factorization"});

  {
    const VerifyResult shortest = dsq::exhaustive_verify(9, 9, {"min_fs_length"});
    const VerifyResult ten = dsq::exhaustive_verify(10, 2, {"min_fs_length"});
    const std::size_t d = dsq::delta(dsq::Word("abaababaab"));
    const bool pass = !shortest.shortest_fs_length && ten.shortest_fs_length &&
                      *ten.shortest_fs_length == 10 && d == 1;
    report(pass, "minimal-length witness",
           std::to_string(shortest.words) + " words of length <= 9 without an "
           "FS-double square; abaababaab has delta " + std::to_string(d));
  }

  {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    std::size_t runs = 0;
    for (std::size_t d = 1; d <= 4; ++d) {
      for (std::size_t n = d; n <= 18; ++n) {
        const auto r = dsq::sigma_search(d, n);
        ++runs;
        if (!r.conjecture_holds()) {
          pass = false;
          detail += " [sigma_" + std::to_string(d) + "(" + std::to_string(n) +
                    ") = " + std::to_string(r.sigma) + "]";
        }
      }
    }
    const auto small = dsq::sigma_search(2, 5);
    bool has_ababa = false;
    for (const auto& w : small.witnesses) has_ababa = has_ababa || w == "ababa";
    pass = pass && small.sigma == 2 && has_ababa;

    dsq::ShardOptions serial;
    serial.jobs = 1;
    dsq::ShardOptions parallel;
    parallel.jobs = 3;
    const bool same = dsq::sigma_search(3, 14, serial) == dsq::sigma_search(3, 14, parallel) &&
                      dsq::exhaustive_verify(11, 3, {"two_rightmost_max", "inversion_factor_lemma"}, serial) ==
                          dsq::exhaustive_verify(11, 3, {"two_rightmost_max", "inversion_factor_lemma"}, parallel);
    pass = pass && same;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu searches sigma_d(n) <= n - d, sigma_2(5) = %zu%s, "
                  "jobs 1 and 3 %s, %.1f s",
                  runs, small.sigma, has_ababa ? " with ababa" : "",
                  same ? "agree" : "differ", seconds_since(start));
    report(pass, "sigma conjecture for d <= 4, n <= 18", buf + detail);
  }

  {
    const VerifyResult longer = dsq::exhaustive_verify(20, 2, {"mate_taxonomy"});
    std::vector<const VerifyResult*> runs = corpus;
    runs.push_back(&longer);
    criterion("mate taxonomy totality", runs, {"mate_taxonomy"});
  }

  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
