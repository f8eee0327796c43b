#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wildpi/word.hpp"

namespace wildpi {

/// Depth-D truncation (w_1, ..., w_D) of an element of lim F_n.
///
/// Invariants: w_n only uses generators g_1..g_n, and
/// project(w_{n+1}, n) == w_n for 1 <= n < D. Values are only produced by
/// `validate_coherent` and by operations that preserve coherence.
class TruncatedCoherentSequence {
public:
  static TruncatedCoherentSequence identity(std::uint32_t depth);

  std::uint32_t depth() const noexcept {
    return static_cast<std::uint32_t>(levels_.size());
  }
  /// Level n, 1-based.
  const ReducedWord &level(std::uint32_t n) const { return levels_.at(n - 1); }
  std::span<const ReducedWord> levels() const noexcept { return levels_; }

  friend bool operator==(const TruncatedCoherentSequence &,
                         const TruncatedCoherentSequence &) = default;

private:
  friend TruncatedCoherentSequence
  validate_coherent(std::vector<ReducedWord> levels);
  friend TruncatedCoherentSequence
  seq_multiply(const TruncatedCoherentSequence &,
               const TruncatedCoherentSequence &);
  friend TruncatedCoherentSequence
  seq_invert(const TruncatedCoherentSequence &);

  explicit TruncatedCoherentSequence(std::vector<ReducedWord> levels)
      : levels_(std::move(levels)) {}

  std::vector<ReducedWord> levels_;
};

/// Throws IndexTooLarge(n) / IncoherentAt(n) for the first bad level,
/// EmptySequence for no levels.
TruncatedCoherentSequence validate_coherent(std::vector<ReducedWord> levels);

/// Level m is project(w, m). Throws DepthTooSmall when depth < max index.
TruncatedCoherentSequence embed_word(const ReducedWord &w, std::uint32_t depth);

/// Throws DepthMismatch.
TruncatedCoherentSequence seq_multiply(const TruncatedCoherentSequence &a,
                                       const TruncatedCoherentSequence &b);
TruncatedCoherentSequence seq_invert(const TruncatedCoherentSequence &a);

/// w_1 = e, w_{n+1} = w_n [g_{n+1}, g_1]. The g_1 count grows by two at
/// every level, so no truncation ever shows it stabilizing.
TruncatedCoherentSequence commutator_tower(std::uint32_t depth);

struct GeneratorCounts {
  std::uint32_t generator;
  /// occurrence counts at levels generator..depth
  std::vector<std::size_t> counts;
  /// Least N with counts constant on [N, depth]. Absent when the count
  /// still changes between the last two observed levels.
  std::optional<std::uint32_t> witness;
};

struct StabilizationReport {
  std::uint32_t depth;
  std::vector<GeneratorCounts> generators; // k = 1..depth
};

StabilizationReport stabilization_report(const TruncatedCoherentSequence &a);

/// Truncation-exact verdict of the eventual-constancy membership test.
/// `consistent` never certifies membership in the image of the earring
/// group: it only says nothing in the first D levels rules it out.
struct MembershipVerdict {
  bool consistent;
  std::map<std::uint32_t, std::uint32_t> witnesses; // k -> N_k
  std::vector<std::uint32_t> unstable;              // k without a witness
};

MembershipVerdict in_image_up_to_depth(const TruncatedCoherentSequence &a);

} // namespace wildpi
