#include "dsq/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dsq/bounds.hpp"
#include "dsq/doublesq.hpp"
#include "dsq/enumerate.hpp"
#include "dsq/families.hpp"
#include "dsq/inversion.hpp"
#include "dsq/mates.hpp"
#include "dsq/squares.hpp"

namespace dsq {

using nlohmann::json;

bool VerifyResult::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyStats& p) { return p.violations == 0; });
}

namespace {

// A pair of rightmost squares at one start, factorized when possible.
struct FsEntry {
  DoubleSquare square;
  std::optional<Factorization> factors;
};

struct Context {
  explicit Context(const Word& word) : w(word), table(word) {
    overfull = table.overfull_positions();
    const auto squares = table.squares();
    for (std::size_t i = 0; i + 1 < squares.size(); ++i) {
      if (squares[i].start != squares[i + 1].start) continue;
      FsEntry e{DoubleSquare{w, squares[i].start, squares[i].gen_len,
                             squares[i + 1].gen_len},
                std::nullopt};
      try {
        e.factors = factorize(e.square.u(), e.square.U());
      } catch (const std::invalid_argument&) {
        factorize_failed = true;
      }
      entries.push_back(std::move(e));
    }
    if (!factorize_failed) {
      for (const auto& e : entries) fs.push_back(FsDoubleSquare{e.square, *e.factors});
    }
  }

  // Properties below the counting level need a sound FS list.
  bool sound() const { return overfull.empty() && !factorize_failed && !fs.empty(); }

  const std::vector<MateClauses>& clauses() {
    if (clauses_.empty() && fs.size() > 1) {
      clauses_.resize(fs.size());
      for (std::size_t i = 1; i < fs.size(); ++i) {
        clauses_[i] = mate_clauses(fs[0], fs[i]);
      }
    }
    return clauses_;
  }

  MateKind kind(std::size_t i) { return classify(clauses()[i]); }

  const Family& family() {
    if (!family_) family_ = decompose_family(fs);
    return *family_;
  }

  Word w;
  RightmostTable table;
  std::vector<std::size_t> overfull;
  std::vector<FsEntry> entries;
  bool factorize_failed = false;
  std::vector<FsDoubleSquare> fs;

 private:
  std::vector<MateClauses> clauses_;
  std::optional<Family> family_;
};

class Recorder {
 public:
  Recorder(VerifyResult& r, std::size_t index, const Word& w)
      : r_(r), stats_(r.properties[index]), w_(w) {}

  template <class Witness>
  void check(bool ok, Witness&& witness) {
    ++stats_.checked;
    if (ok) return;
    ++stats_.violations;
    if (stats_.violations <= certificates_per_property) {
      r_.certificates.push_back(Certificate{w_.str(), stats_.name, witness()});
    }
  }

  VerifyResult& result() { return r_; }

 private:
  VerifyResult& r_;
  PropertyStats& stats_;
  const Word& w_;
};

std::string describe(const DoubleSquare& d) {
  std::ostringstream out;
  out << "start=" << d.start << " u_len=" << d.u_len << " U_len=" << d.U_len;
  return out.str();
}

std::string describe(const FsDoubleSquare& d) {
  std::ostringstream out;
  out << describe(d.square) << " u1=" << d.factors.u1 << " u2=" << d.factors.u2
      << " e1=" << d.factors.e1 << " e2=" << d.factors.e2;
  return out.str();
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

void two_rightmost_max(Context& c, Recorder& rec) {
  rec.check(c.overfull.empty(), [&] {
    std::ostringstream out;
    out << "three rightmost squares at";
    for (auto p : c.overfull) out << ' ' << p;
    return out.str();
  });
}

void cr_fs(Context& c, Recorder& rec) {
  const auto all = enumerate_squares(c.w.view());
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].start == all[i].start) ++j;
    for (std::size_t a = i; a < j; ++a) {
      if (!is_primitive(c.w.view().substr(all[a].start - 1, all[a].gen_len))) {
        continue;
      }
      for (std::size_t b = a + 1; b < j; ++b) {
        for (std::size_t k = b + 1; k < j; ++k) {
          rec.check(all[k].gen_len >= all[a].gen_len + all[b].gen_len, [&] {
            std::ostringstream out;
            out << "start=" << all[a].start << " lengths=" << all[a].gen_len
                << ',' << all[b].gen_len << ',' << all[k].gen_len;
            return out.str();
          });
        }
      }
    }
    i = j;
  }
}

void balanced(Context& c, Recorder& rec) {
  for (const auto& e : c.entries) {
    const auto u = e.square.u();
    const auto U = e.square.U();
    const bool ok = is_balanced_double_square(u, U) &&
                    check_factorizable(u, U).no_later_u_square;
    rec.check(ok, [&] { return describe(e.square); });
  }
}

void min_fs_length(Context& c, Recorder& rec) {
  if (c.entries.empty()) return;
  rec.check(c.w.size() >= 10, [&] { return "length=" + std::to_string(c.w.size()); });
  for (const auto& e : c.entries) {
    rec.check(2 * e.square.U_len >= 10, [&] { return describe(e.square); });
  }
}

std::string factorization_failure(const FsEntry& e) {
  if (!e.factors) return "not factorizable";
  const auto& f = *e.factors;
  const auto u = e.square.u();
  const auto U = e.square.U();
  if (f.u() != u || f.U() != U) return "reassembly differs";
  const auto candidates = factorization_candidates(u, U);
  if (candidates.size() != 1 || !(candidates.front() == f)) {
    return std::to_string(candidates.size()) + " candidate factorizations";
  }
  if (!is_primitive(U)) return "U not primitive";
  if (2 * U.size() < 10) return "U^2 shorter than 10";
  for (const auto& d : periodic_decompositions(u, 1)) {
    const std::size_t rest = U.size() - d.u2.size();
    if (rest % d.u1.size() == 0 && U == power(d.u1, rest / d.u1.size()) + d.u2) {
      return "U shares the periodic form of u with u1=" + d.u1;
    }
  }
  const auto twice = periodic_decompositions(u, 2);
  if (twice.size() > 1 || (f.e1 >= 2 && (twice.size() != 1 || twice[0].u1 != f.u1))) {
    return "periodic form of u with exponent >= 2 is not unique";
  }
  const auto b = shift_budget(f);
  if (b.left + b.right + 2 > f.u1.size()) return "lcp + lcs exceeds |u1| - 2";
  return {};
}

void factorization(Context& c, Recorder& rec) {
  for (const auto& e : c.entries) {
    const std::string failure = factorization_failure(e);
    rec.check(failure.empty(), [&] { return describe(e.square) + ": " + failure; });
  }
}

void nonprimitive_case(Context& c, Recorder& rec) {
  for (const auto& e : c.entries) {
    if (is_primitive(e.square.u())) continue;
    bool ok = false;
    try {
      ok = verify_nonprimitive_case(e.square.u(), e.square.U());
    } catch (const std::invalid_argument&) {
    }
    rec.check(ok, [&] { return describe(e.square); });
  }
}

void inversion_factor_lemma(Context& c, Recorder& rec) {
  for (const auto& d : c.fs) {
    const auto scanned = find_inversion_factors(d.factors);
    const auto predicted = interval_positions(intervals(d.factors));
    rec.check(scanned == predicted, [&] {
      std::ostringstream out;
      out << describe(d) << " scanned";
      for (auto p : scanned) out << ' ' << p;
      out << " predicted";
      for (auto p : predicted) out << ' ' << p;
      return out.str();
    });
  }
}

void inversion_intervals(Context& c, Recorder& rec) {
  for (const auto& d : c.fs) {
    const auto& f = d.factors;
    const auto iv = intervals(f);
    const std::size_t u = f.u_len();
    const std::size_t U = f.U_len();
    const std::size_t last = 2 * U - 2 * f.u1.size() + 1;
    const auto b = shift_budget(f);
    std::string failure;
    if (!(iv.L1 <= iv.R1 && iv.R1 < u)) failure = "first interval not inside u";
    else if (!(u + 1 < iv.L2 && iv.L2 <= iv.R2 && iv.R2 <= last)) failure = "second interval misplaced";
    else if (iv.R1 - iv.L1 + 2 > f.u1.size()) failure = "first interval too wide";
    else if (iv.N1 > b.left && iv.L2 - iv.L1 != U) failure = "L2 - L1 != |U|";
    else if (iv.N2 + b.right <= last && iv.R2 - iv.R1 != U) failure = "R2 - R1 != |U|";
    rec.check(failure.empty(), [&] { return describe(d) + ": " + failure; });
  }
}

void v_cases(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& U = c.fs.front();
  const std::size_t r1 = right_shift_limit(U);
  for (const auto& sq : c.table.squares()) {
    if (sq.start < U.square.start) continue;
    const VCase vc = sq.start < r1 ? v_case(U, sq) : VCase::none;
    if (sq.start < r1) {
      rec.check(vc != VCase::none && vc != VCase::a3, [&] {
        return describe(U) + " v start=" + std::to_string(sq.start) +
               " len=" + std::to_string(sq.gen_len) + " case=" + std::string(to_string(vc));
      });
    }
    if (sq.start + sq.gen_len - 1 <= U.square.end_first_u()) {
      rec.check(sq.start < r1 && (vc == VCase::a1 || vc == VCase::a2), [&] {
        return describe(U) + " v start=" + std::to_string(sq.start) +
               " len=" + std::to_string(sq.gen_len) + " ends inside u";
      });
    }
  }
}

void mate_taxonomy(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& U = c.fs.front();
  const std::size_t r1 = right_shift_limit(U);
  for (std::size_t i = 1; i < c.fs.size(); ++i) {
    const auto& V = c.fs[i];
    const auto& cl = c.clauses()[i];
    const MateKind k = classify(cl);
    if (cl.matched() > 1) ++rec.result().clause_overlaps;
    if (cl.beta_exponent_one) ++rec.result().beta_exponent_one;
    std::string failure;
    if (k == MateKind::unclassified) {
      failure = "unclassified";
    } else if (V.square.start < r1) {
      if (k == MateKind::epsilon || k == MateKind::super_epsilon) {
        failure = "epsilon before R1";
      }
    } else if (k != MateKind::epsilon && k != MateKind::super_epsilon) {
      failure = "not epsilon after R1";
    } else if (V.square.end_first_u() <= U.square.end_first_u()) {
      failure = "epsilon ending inside u";
    }
    if (failure.empty() && k == MateKind::beta && U.factors.e1 < U.factors.e2 + 2) {
      failure = "beta with e1 < e2 + 2";
    }
    rec.check(failure.empty(), [&] {
      return describe(U) + " vs " + describe(V) + " kind=" +
             std::string(to_string(k)) + ": " + failure;
    });
  }
}

void gamma_exponents(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& U = c.fs.front();
  for (std::size_t i = 1; i < c.fs.size(); ++i) {
    if (c.kind(i) != MateKind::gamma) continue;
    const auto& V = c.fs[i];
    std::optional<GammaType> type;
    try {
      type = gamma_type(U, V.square);
    } catch (const std::invalid_argument&) {
    }
    if (!type) {
      rec.check(false, [&] { return describe(V) + ": no gamma type"; });
      continue;
    }
    if (type->p < 2 || type->q < 2) continue;
    const bool ok = V.factors.e1 == V.factors.e2 &&
                    V.factors.u2.size() <= std::min(type->p, type->q) * U.factors.u1.size();
    rec.check(ok, [&] {
      return describe(V) + " type=(" + std::to_string(type->p) + "," +
             std::to_string(type->q) + ")";
    });
  }
}

void epsilon_after_gamma(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& U = c.fs.front();
  const auto& f = U.factors;
  for (std::size_t i = 1; i < c.fs.size(); ++i) {
    if (c.kind(i) != MateKind::gamma) continue;
    std::optional<GammaType> type;
    try {
      type = gamma_type(U, c.fs[i].square);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (type->p < 2 || type->q < 2) continue;
    for (std::size_t j = i + 1; j < c.fs.size(); ++j) {
      if (classify_mate(c.fs[i], c.fs[j]) != MateKind::epsilon) continue;
      const auto gt = gap_tail(U.square, c.fs[j].square);
      const bool ok = gt.gap >= as_ll(type->t * f.u1.size()) &&
                      gt.tail >= as_ll((f.e1 + f.e2) * f.u1.size());
      rec.check(ok, [&] {
        return describe(c.fs[i]) + " then " + describe(c.fs[j]) +
               " gap=" + std::to_string(gt.gap) + " tail=" + std::to_string(gt.tail);
      });
    }
  }
}

void super_epsilon(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& U = c.fs.front();
  const auto& f = U.factors;
  const long long p1 = as_ll(f.u1.size());
  const long long p2 = as_ll(f.u2.size());
  const long long e1 = as_ll(f.e1);
  const long long e2 = as_ll(f.e2);
  for (std::size_t i = 1; i < c.fs.size(); ++i) {
    if (c.kind(i) != MateKind::super_epsilon) continue;
    const auto gt = gap_tail(U.square, c.fs[i].square);
    const bool a = gt.gap >= (2 * e1 + e2 - 3) * p1 + 2 * p2 &&
                   gt.tail >= (e1 + e2 - 2) * p1 + p2;
    const bool b = gt.gap >= e1 * p1 + p2 && gt.tail >= (e1 + e2 - 1) * p1 + p2;
    rec.check(a || b, [&] {
      return describe(c.fs[i]) + " gap=" + std::to_string(gt.gap) +
             " tail=" + std::to_string(gt.tail);
    });
  }
}

void rot1(Context& c, Recorder& rec) {
  for (const auto& d : c.fs) {
    if (d.factors.e1 != d.factors.e2) continue;
    const std::string_view y = c.w.view().substr(d.square.end_U_square());
    const std::size_t common = lcp(d.square.u(), y);
    rec.check(common < d.factors.u2.size(), [&] {
      return describe(d) + " lcp=" + std::to_string(common);
    });
  }
}

void family_size(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& fam = c.family();
  const std::size_t bound = family_size_bound(fam);
  rec.check(fam.size() <= bound, [&] {
    return describe(fam.head()) + " kind=" + std::string(to_string(fam.kind)) +
           " size=" + std::to_string(fam.size()) + " bound=" + std::to_string(bound);
  });
}

void family_structure(Context& c, Recorder& rec) {
  if (!c.sound()) return;
  const auto& fam = c.family();
  const auto& head = fam.head().factors;
  const std::size_t alpha_cap = shift_budget(head).right + 1;
  std::optional<std::pair<std::size_t, std::size_t>> last_beta;
  std::optional<std::size_t> first_gamma;
  for (const auto& seg : fam.segments) {
    std::string failure;
    if (seg.kind == SegmentKind::alpha_segment && seg.members.size() > alpha_cap) {
      failure = "alpha segment too large";
    }
    if (seg.kind == SegmentKind::beta_segment) {
      if (seg.members.size() + 1 > head.u1.size()) failure = "beta segment too large";
      const auto t = seg.type_pair;
      if (t.first + t.second != head.e1 + head.e2 || t.first >= head.e1) {
        failure = "beta segment type off the (p - i, q + i) line";
      }
      if (last_beta && t.first >= last_beta->first) failure = "beta types not decreasing";
      last_beta = t;
    }
    if (seg.kind == SegmentKind::gamma_segment) {
      for (std::size_t m : seg.members) {
        if (!first_gamma) {
          first_gamma = m;
          continue;
        }
        if (classify_mate(fam.members[*first_gamma].square, fam.members[m].square) !=
            MateKind::alpha) {
          failure = "gamma member not an alpha-mate of the first gamma-mate";
        }
      }
    }
    rec.check(failure.empty(), [&] {
      return describe(fam.head()) + " segment " + std::string(to_string(seg.kind)) +
             " (" + std::to_string(seg.type_pair.first) + "," +
             std::to_string(seg.type_pair.second) + ") x" +
             std::to_string(seg.members.size()) + ": " + failure;
    });
  }
}

void bottomless_alpha(Context& c, Recorder& rec) {
  if (!c.sound() || c.fs.front().square.start != 1) return;
  const auto& fam = c.family();
  if (fam.kind != FamilyKind::alpha || fam.size() != c.fs.size()) return;
  const long long n = as_ll(c.w.size());
  const long long d = as_ll(c.fs.size());
  const long long u = as_ll(c.fs.front().square.u_len);
  rec.check(6 * d <= 5 * n - 2 * u, [&] { return "delta=" + std::to_string(d); });
}

void bound_entry(Context& c, Recorder& rec, std::string_view name) {
  for (const auto& chk : check_bounds(c.table).checks) {
    if (chk.name != name) continue;
    rec.check(chk.pass, [&] {
      return chk.name + " observed=" + std::to_string(chk.observed) +
             " bound=" + std::to_string(chk.bound) + " scale=" + std::to_string(chk.scale);
    });
  }
}

void delta_bound(Context& c, Recorder& rec) { bound_entry(c, rec, "fs_double_squares"); }

void distinct_bound(Context& c, Recorder& rec) {
  bound_entry(c, rec, "distinct_squares");
  bound_entry(c, rec, "distinct_squares_2n");
}

void nonprimitive_bound(Context& c, Recorder& rec) {
  bound_entry(c, rec, "nonprimitive_squares");
}

void strengthened_bound(Context& c, Recorder& rec) {
  bound_entry(c, rec, "fs_double_squares_strengthened");
}

using Check = void (*)(Context&, Recorder&);

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> table = {
      {"two_rightmost_max", two_rightmost_max},
      {"cr_fs", cr_fs},
      {"balanced", balanced},
      {"min_fs_length", min_fs_length},
      {"factorization", factorization},
      {"nonprimitive_case", nonprimitive_case},
      {"inversion_factor_lemma", inversion_factor_lemma},
      {"inversion_intervals", inversion_intervals},
      {"v_cases", v_cases},
      {"mate_taxonomy", mate_taxonomy},
      {"gamma_exponents", gamma_exponents},
      {"epsilon_after_gamma", epsilon_after_gamma},
      {"super_epsilon", super_epsilon},
      {"rot1", rot1},
      {"family_size", family_size},
      {"family_structure", family_structure},
      {"bottomless_alpha", bottomless_alpha},
      {"delta_bound", delta_bound},
      {"distinct_bound", distinct_bound},
      {"nonprimitive_bound", nonprimitive_bound},
      {"strengthened_bound", strengthened_bound},
  };
  return table;
}

Check lookup(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn;
  }
  throw std::invalid_argument("unknown property: " + name);
}

void merge_into(VerifyResult& into, const VerifyResult& part) {
  into.words += part.words;
  for (std::size_t i = 0; i < into.properties.size(); ++i) {
    into.properties[i].checked += part.properties[i].checked;
    into.properties[i].violations += part.properties[i].violations;
  }
  std::map<std::string, std::size_t> kept;
  for (const auto& cert : into.certificates) ++kept[cert.property];
  for (const auto& cert : part.certificates) {
    if (kept[cert.property]++ < certificates_per_property) {
      into.certificates.push_back(cert);
    }
  }
  if (part.shortest_fs_length &&
      (!into.shortest_fs_length || *part.shortest_fs_length < *into.shortest_fs_length)) {
    into.shortest_fs_length = part.shortest_fs_length;
  }
  into.clause_overlaps += part.clause_overlaps;
  into.beta_exponent_one += part.beta_exponent_one;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> parse_suite(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string name(csv.substr(pos, comma - pos));
    pos = comma + 1;
    if (name.empty()) continue;
    if (name == "all") {
      for (const auto& n : property_names()) out.push_back(n);
      continue;
    }
    lookup(name);
    out.push_back(name);
  }
  if (out.empty()) throw std::invalid_argument("empty property suite");
  std::vector<std::string> unique;
  for (const auto& n : property_names()) {
    if (std::find(out.begin(), out.end(), n) != out.end()) unique.push_back(n);
  }
  return unique;
}

VerifyResult make_result(const std::vector<std::string>& suite) {
  VerifyResult r;
  for (const auto& name : suite) {
    lookup(name);
    r.properties.push_back(PropertyStats{name, 0, 0});
  }
  return r;
}

void check_word(const Word& w, const std::vector<std::string>& suite,
                VerifyResult& result) {
  Context ctx(w);
  ++result.words;
  if (!ctx.entries.empty() &&
      (!result.shortest_fs_length || w.size() < *result.shortest_fs_length)) {
    result.shortest_fs_length = w.size();
  }
  for (std::size_t i = 0; i < suite.size(); ++i) {
    Recorder rec(result, i, w);
    lookup(suite[i])(ctx, rec);
  }
}

VerifyResult exhaustive_verify(std::size_t max_len, std::size_t alphabet,
                               const std::vector<std::string>& suite,
                               const ShardOptions& options) {
  if (suite.empty()) throw std::invalid_argument("empty property suite");
  if (alphabet < 1 || alphabet > 26) {
    throw std::invalid_argument("alphabet size must be in 1..26");
  }
  if (max_len == 0) throw std::invalid_argument("max length must be positive");
  VerifyResult total = make_result(suite);

  // Shard "" holds the words shorter than the prefix length; every other
  // shard is a canonical prefix together with all of its extensions.
  const std::size_t k = std::min<std::size_t>(max_len, 8);
  std::vector<std::string> shards{""};
  for (auto& p : canonical_words(k, alphabet)) shards.push_back(std::move(p));

  auto work = [&](std::size_t i) {
    VerifyResult part = make_result(suite);
    std::string word = shards[i];
    const std::size_t limit = i == 0 ? k - 1 : max_len;
    walk_canonical(word, limit, alphabet, [&](const std::string& w) {
      if (!w.empty()) check_word(Word(w), suite, part);
      return true;
    });
    return to_json(part);
  };
  const json signature{{"kind", "verify"},
                       {"max_len", max_len},
                       {"alphabet", alphabet},
                       {"suite", suite}};
  for (const auto& part : run_shards(shards, signature, work, options)) {
    merge_into(total, verify_result_from_json(part));
  }
  return total;
}

json to_json(const VerifyResult& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    props.push_back({{"name", p.name}, {"checked", p.checked}, {"violations", p.violations}});
  }
  json certs = json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"word", c.word}, {"property", c.property}, {"witness", c.witness}});
  }
  return json{{"words", r.words},
              {"properties", props},
              {"certificates", certs},
              {"shortest_fs_length",
               r.shortest_fs_length ? json(*r.shortest_fs_length) : json(nullptr)},
              {"clause_overlaps", r.clause_overlaps},
              {"beta_exponent_one", r.beta_exponent_one}};
}

VerifyResult verify_result_from_json(const json& j) {
  VerifyResult r;
  r.words = j.at("words").get<std::size_t>();
  for (const auto& p : j.at("properties")) {
    r.properties.push_back(PropertyStats{p.at("name").get<std::string>(),
                                         p.at("checked").get<std::size_t>(),
                                         p.at("violations").get<std::size_t>()});
  }
  for (const auto& c : j.at("certificates")) {
    r.certificates.push_back(Certificate{c.at("word").get<std::string>(),
                                         c.at("property").get<std::string>(),
                                         c.at("witness").get<std::string>()});
  }
  if (!j.at("shortest_fs_length").is_null()) {
    r.shortest_fs_length = j.at("shortest_fs_length").get<std::size_t>();
  }
  r.clause_overlaps = j.at("clause_overlaps").get<std::size_t>();
  r.beta_exponent_one = j.at("beta_exponent_one").get<std::size_t>();
  return r;
}

}  // namespace dsq
