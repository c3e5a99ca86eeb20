#include "dsq/figures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dsq/families.hpp"
#include "dsq/inversion.hpp"

namespace dsq {

namespace {

struct FigureShape {
  std::size_t e1;
  std::size_t e2;
  std::size_t extension;  // symbols of U appended after U^2
};

const FigureShape& shape_of(int n) {
  static const FigureShape shapes[] = {{4, 2, 0}, {2, 2, 3}, {2, 1, 3}, {5, 1, 15}};
  if (n < 1 || n > figure_count) throw std::out_of_range("no such figure");
  return shapes[n - 1];
}

std::string positions_text(const std::vector<std::size_t>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ps[i]);
  }
  return out;
}

std::string segments_text(const Family& fam) {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
  for (const auto& s : fam.segments) {
    switch (s.kind) {
      case SegmentKind::alpha_segment: ++alpha; break;
      case SegmentKind::beta_segment: ++beta; break;
      case SegmentKind::gamma_segment: ++gamma; break;
    }
  }
  return std::to_string(alpha) + " alpha, " + std::to_string(beta) + " beta, " +
         std::to_string(gamma) + " gamma";
}

FigureCheck make_check(std::string name, std::string expected,
                       std::string observed) {
  const bool pass = expected == observed;
  return FigureCheck{std::move(name), std::move(expected), std::move(observed), pass};
}

void mark_square(std::string& line, std::size_t start, std::size_t len,
                 const char (&ends)[5]) {
  const std::size_t s = start - 1;
  for (std::size_t i = s; i < s + 2 * len; ++i) line[i] = '-';
  line[s] = ends[0];
  line[s + len - 1] = ends[1];
  line[s + len] = ends[2];
  line[s + 2 * len - 1] = ends[3];
}

std::string trimmed(std::string line) {
  line.erase(line.find_last_not_of(' ') + 1);
  return line;
}

}  // namespace

Factorization figure_factorization(int n) {
  const auto& s = shape_of(n);
  return make_factorization("aaabaa", "aaab", s.e1, s.e2);
}

Word figure_word(int n) {
  const auto& s = shape_of(n);
  const Factorization f = figure_factorization(n);
  const std::string U = f.U();
  return Word(U + U + U.substr(0, s.extension));
}

std::vector<FigureCheck> figure_checks(int n) {
  const Factorization f = figure_factorization(n);
  const Word w = figure_word(n);
  std::vector<FigureCheck> out;
  if (n == 1) {
    const auto budget = shift_budget(f);
    out.push_back(make_check("lcp(u1, u1_hat)", "3", std::to_string(budget.right)));
    out.push_back(make_check("lcs(u1, u1_hat)", "0", std::to_string(budget.left)));
    out.push_back(make_check("natural inversion factor", "aaaaabaaabaa",
                             natural_inversion_factor(f)));
    out.push_back(make_check("inversion factor positions",
                             "23,24,25,26,63,64,65,66",
                             positions_text(find_inversion_factors(f))));
    out.push_back(make_check("interval positions", "23,24,25,26,63,64,65,66",
                             positions_text(interval_positions(intervals(f)))));
    return out;
  }
  const Family fam = decompose_family(w);
  out.push_back(make_check("head at 1", "1", std::to_string(fam.head().square.start)));
  if (n == 2 || n == 3) {
    out.push_back(make_check("family kind", "alpha", std::string(to_string(fam.kind))));
    out.push_back(make_check("family size", "4", std::to_string(fam.size())));
    if (n == 2) {
      out.push_back(make_check("family size equals |u2|", "4",
                               std::to_string(f.u2.size())));
    } else {
      out.push_back(make_check("family size equals |u1| - 2", "4",
                               std::to_string(f.u1.size() - 2)));
    }
  } else {
    out.push_back(make_check("family kind", "alpha_beta",
                             std::string(to_string(fam.kind))));
    out.push_back(make_check("segments", "1 alpha, 2 beta, 0 gamma", segments_text(fam)));
    std::size_t largest = 0;
    for (const auto& s : fam.segments) largest = std::max(largest, s.members.size());
    out.push_back(make_check("largest segment", "4", std::to_string(largest)));
  }
  const std::size_t bound = family_size_bound(fam);
  out.push_back(make_check("size within bound", "true",
                           fam.size() <= bound ? "true" : "false"));
  return out;
}

std::string render_figure(int n, bool color) {
  const Factorization f = figure_factorization(n);
  const Word w = figure_word(n);
  const std::size_t core = 2 * f.U_len();
  const std::string blank(w.size(), ' ');
  std::ostringstream out;

  out << "figure " << n << ": u1=" << f.u1 << " u2=" << f.u2 << " e1=" << f.e1
      << " e2=" << f.e2 << " n=" << w.size() << '\n';
  if (color) {
    out << "\x1b[1m" << w.view().substr(0, core) << "\x1b[0m"
        << w.view().substr(core) << '\n';
  } else {
    out << w.view() << '\n';
  }

  std::string under = blank;
  std::size_t pos = 0;
  auto put = [&](std::size_t len, char c) {
    for (std::size_t i = 0; i < len; ++i) under[pos++] = c;
  };
  for (int copy = 0; copy < 2; ++copy) {
    for (std::size_t i = 0; i < f.e1; ++i) {
      put(f.u2.size(), '_');
      put(f.u2_bar.size(), '.');
    }
    put(f.u2.size(), '_');
    for (std::size_t i = 0; i < f.e2; ++i) {
      put(f.u2.size(), '_');
      put(f.u2_bar.size(), '.');
    }
  }
  out << trimmed(under) << '\n';

  std::string marks = blank;
  for (std::size_t p : find_inversion_factors(f)) marks[p - 1] = '^';
  out << trimmed(marks) << '\n';

  for (const auto& fs : find_fs_double_squares(w)) {
    std::string shorter = blank;
    std::string longer = blank;
    mark_square(shorter, fs.square.start, fs.square.u_len, "[][]");
    mark_square(longer, fs.square.start, fs.square.U_len, "[)()");
    out << trimmed(shorter) << "  s=" << fs.square.start << " (" << fs.factors.e1
        << ',' << fs.factors.e2 << ")\n";
    out << trimmed(longer) << '\n';
  }
  return out.str();
}

}  // namespace dsq
