#include "dsq/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dsq {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::alpha: return "alpha";
    case FamilyKind::alpha_beta: return "alpha_beta";
    case FamilyKind::alpha_beta_gamma: return "alpha_beta_gamma";
  }
  return "alpha";
}

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::alpha_segment: return "alpha_segment";
    case SegmentKind::beta_segment: return "beta_segment";
    case SegmentKind::gamma_segment: return "gamma_segment";
  }
  return "alpha_segment";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
  for (auto k : {FamilyKind::alpha, FamilyKind::alpha_beta,
                 FamilyKind::alpha_beta_gamma}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<SegmentKind> segment_kind_from_string(std::string_view name) {
  for (auto k : {SegmentKind::alpha_segment, SegmentKind::beta_segment,
                 SegmentKind::gamma_segment}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

SegmentKind segment_kind_for(MateKind relation) {
  switch (relation) {
    case MateKind::beta: return SegmentKind::beta_segment;
    case MateKind::gamma: return SegmentKind::gamma_segment;
    default: return SegmentKind::alpha_segment;
  }
}

void build_segments(Family& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& m = fam.members[i];
    const SegmentKind kind = segment_kind_for(m.relation);
    const std::pair<std::size_t, std::size_t> type{m.square.factors.e1,
                                                   m.square.factors.e2};
    if (fam.segments.empty() || fam.segments.back().kind != kind ||
        fam.segments.back().type_pair != type) {
      fam.segments.push_back(Segment{kind, type, {}});
    }
    fam.segments.back().members.push_back(i);
  }
}

}  // namespace

Family decompose_family(const std::vector<FsDoubleSquare>& fs) {
  if (fs.empty()) throw std::invalid_argument("no double square");
  const FsDoubleSquare& U = fs.front();

  std::vector<MateKind> kinds(fs.size(), MateKind::alpha);
  std::optional<std::size_t> next_non_alpha;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    kinds[i] = classify_mate(U, fs[i]);
    if (kinds[i] != MateKind::alpha && !next_non_alpha) next_non_alpha = i;
  }

  Family fam;
  const bool with_beta =
      next_non_alpha && kinds[*next_non_alpha] == MateKind::beta;
  fam.members.push_back(FamilyMember{U, MateKind::alpha, std::nullopt});
  bool any_gamma = false;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const MateKind k = kinds[i];
    const bool member =
        k == MateKind::alpha ||
        (with_beta && (k == MateKind::beta || k == MateKind::gamma));
    if (!member) continue;
    FamilyMember m{fs[i], k, std::nullopt};
    if (k == MateKind::gamma) {
      m.gamma = gamma_type(U, fs[i].square);
      any_gamma = true;
    }
    fam.members.push_back(std::move(m));
  }
  fam.kind = !with_beta   ? FamilyKind::alpha
             : any_gamma ? FamilyKind::alpha_beta_gamma
                         : FamilyKind::alpha_beta;
  build_segments(fam);
  return fam;
}

Family decompose_family(const Word& w) {
  return decompose_family(find_fs_double_squares(w));
}

std::size_t family_size_bound(const Family& f) {
  const auto& head = f.head().factors;
  const std::size_t p = head.e1;
  const std::size_t q = head.e2;
  const std::size_t n1 = head.u1.size();
  const std::size_t n2 = head.u2.size();
  switch (f.kind) {
    case FamilyKind::alpha:
      return p == q ? n2 : n1 - 1;
    case FamilyKind::alpha_beta: {
      const auto& last = f.segments.back().type_pair;
      const std::size_t t = p - last.first;
      if (p - t == q + t) return (p - q) / 2 * n1 + n2;
      if (q == 1) return (p - q + 1) / 2 * n1;
      return (p - q) * n1 / 2;
    }
    case FamilyKind::alpha_beta_gamma:
      return 2 * (p + 1) * n1 / 3;
  }
  return 0;
}

FamilySequence iterate_families(const std::vector<FsDoubleSquare>& fs) {
  FamilySequence out;
  std::set<std::size_t> claimed;
  std::set<std::size_t> overlaps;
  for (std::size_t head = 0; head < fs.size(); ++head) {
    if (claimed.count(fs[head].square.start)) continue;
    const std::vector<FsDoubleSquare> rest(fs.begin() + head, fs.end());
    Family fam = decompose_family(rest);
    for (const auto& m : fam.members) {
      if (!claimed.insert(m.square.square.start).second) {
        overlaps.insert(m.square.square.start);
      }
    }
    out.families.push_back(std::move(fam));
  }
  out.overlaps.assign(overlaps.begin(), overlaps.end());
  return out;
}

}  // namespace dsq
