#include "wildpi/earring.hpp"

#include <string>

#include "wildpi/error.hpp"

namespace wildpi {

TruncatedCoherentSequence
TruncatedCoherentSequence::identity(std::uint32_t depth) {
  if (depth == 0)
    throw Error("EmptySequence", "depth must be at least 1");
  return validate_coherent(std::vector<ReducedWord>(depth));
}

TruncatedCoherentSequence validate_coherent(std::vector<ReducedWord> levels) {
  if (levels.empty())
    throw Error("EmptySequence", "a coherent sequence needs at least one level");
  for (std::uint32_t n = 1; n <= levels.size(); ++n) {
    if (levels[n - 1].max_index() > n)
      throw IndexedError("IndexTooLarge", n,
                         "level " + std::to_string(n) +
                             " uses a generator with index > " +
                             std::to_string(n));
  }
  for (std::uint32_t n = 1; n < levels.size(); ++n) {
    if (project(levels[n], n) != levels[n - 1])
      throw IndexedError("IncoherentAt", n,
                         "projection of level " + std::to_string(n + 1) +
                             " differs from level " + std::to_string(n));
  }
  return TruncatedCoherentSequence(std::move(levels));
}

TruncatedCoherentSequence embed_word(const ReducedWord &w,
                                     std::uint32_t depth) {
  if (depth == 0 || depth < w.max_index())
    throw Error("DepthTooSmall", "depth " + std::to_string(depth) +
                                     " is below the word's largest index " +
                                     std::to_string(w.max_index()));
  std::vector<ReducedWord> levels;
  levels.reserve(depth);
  for (std::uint32_t m = 1; m <= depth; ++m)
    levels.push_back(m >= w.max_index() ? w : project(w, m));
  return validate_coherent(std::move(levels));
}

TruncatedCoherentSequence seq_multiply(const TruncatedCoherentSequence &a,
                                       const TruncatedCoherentSequence &b) {
  if (a.depth() != b.depth())
    throw Error("DepthMismatch", "depths " + std::to_string(a.depth()) +
                                     " and " + std::to_string(b.depth()) +
                                     " differ");
  std::vector<ReducedWord> levels;
  levels.reserve(a.depth());
  for (std::uint32_t n = 1; n <= a.depth(); ++n)
    levels.push_back(multiply_reduced(a.level(n), b.level(n)));
  // Projection is a homomorphism, so the product stays coherent.
  return TruncatedCoherentSequence(std::move(levels));
}

TruncatedCoherentSequence seq_invert(const TruncatedCoherentSequence &a) {
  std::vector<ReducedWord> levels;
  levels.reserve(a.depth());
  for (const auto &w : a.levels())
    levels.push_back(invert(w));
  return TruncatedCoherentSequence(std::move(levels));
}

TruncatedCoherentSequence commutator_tower(std::uint32_t depth) {
  if (depth == 0)
    throw Error("EmptySequence", "depth must be at least 1");
  std::vector<ReducedWord> levels{ReducedWord{}};
  const auto g1 = reduced({1});
  for (std::uint32_t n = 1; n < depth; ++n) {
    auto gn = reduced({static_cast<long>(n + 1)});
    levels.push_back(multiply_reduced(levels.back(), commutator(gn, g1)));
  }
  return validate_coherent(std::move(levels));
}

StabilizationReport stabilization_report(const TruncatedCoherentSequence &a) {
  const std::uint32_t depth = a.depth();
  StabilizationReport report{depth, {}};
  report.generators.reserve(depth);
  for (std::uint32_t k = 1; k <= depth; ++k) {
    GeneratorCounts gc{k, {}, std::nullopt};
    for (std::uint32_t n = k; n <= depth; ++n)
      gc.counts.push_back(occurrence_count(a.level(n), k));

    // Walk back from the last level while the count stays put.
    std::size_t first = gc.counts.size() - 1;
    while (first > 0 && gc.counts[first - 1] == gc.counts.back())
      --first;
    const std::uint32_t n0 = k + static_cast<std::uint32_t>(first);
    if (n0 < depth || k == depth)
      gc.witness = n0;
    report.generators.push_back(std::move(gc));
  }
  return report;
}

MembershipVerdict in_image_up_to_depth(const TruncatedCoherentSequence &a) {
  MembershipVerdict v{true, {}, {}};
  for (const auto &gc : stabilization_report(a).generators) {
    if (gc.witness)
      v.witnesses.emplace(gc.generator, *gc.witness);
    else
      v.unstable.push_back(gc.generator);
  }
  v.consistent = v.unstable.empty();
  return v;
}

} // namespace wildpi
