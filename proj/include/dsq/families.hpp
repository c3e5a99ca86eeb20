// The family of the first FS-double square U of a word: U with its alpha-mates,
// and, when the rightmost non-alpha FS-double square is a beta-mate, also its
// beta- and gamma-mates. Members are grouped into segments of equal type.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dsq/doublesq.hpp"
#include "dsq/mates.hpp"

namespace dsq {

enum class FamilyKind { alpha, alpha_beta, alpha_beta_gamma };
enum class SegmentKind { alpha_segment, beta_segment, gamma_segment };

std::string_view to_string(FamilyKind kind);
std::string_view to_string(SegmentKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);
std::optional<SegmentKind> segment_kind_from_string(std::string_view name);

struct FamilyMember {
  FsDoubleSquare square;
  MateKind relation = MateKind::alpha;  // relative to the head; head is alpha
  std::optional<GammaType> gamma;       // set for gamma-mates
};

struct Segment {
  SegmentKind kind = SegmentKind::alpha_segment;
  std::pair<std::size_t, std::size_t> type_pair;  // own (e1, e2)
  std::vector<std::size_t> members;               // indices into Family::members
};

struct Family {
  FamilyKind kind = FamilyKind::alpha;
  std::vector<FamilyMember> members;  // head first, then by start
  std::vector<Segment> segments;

  const FsDoubleSquare& head() const { return members.front().square; }
  std::size_t size() const { return members.size(); }
};

// Family of fs.front() among the given FS-double squares (sorted by start).
// Throws std::invalid_argument("no double square") when fs is empty.
Family decompose_family(const std::vector<FsDoubleSquare>& fs);
Family decompose_family(const Word& w);

std::size_t family_size_bound(const Family& f);

struct FamilySequence {
  std::vector<Family> families;
  // Starts of FS-double squares claimed by more than one family.
  std::vector<std::size_t> overlaps;
};

// Repeatedly takes the first FS-double square not yet in any family as the
// next head, restricted to the squares at or after it.
FamilySequence iterate_families(const std::vector<FsDoubleSquare>& fs);

}  // namespace dsq
