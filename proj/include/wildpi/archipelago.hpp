#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wildpi/earring.hpp"
#include "wildpi/word.hpp"

namespace wildpi {

/// Replace every letter g_i^{+-1} with i < N by g_N^{+-1} (signs kept), then
/// reduce. This is the homomorphism induced by collapsing circles 1..N-1
/// onto circle N.
ReducedWord collapse_substitute(const ReducedWord &w, std::uint32_t N);

/// Evidence about membership in the kernel of pi(E) -> pi(HA).
class KernelVerdict {
public:
  static KernelVerdict witnessed(std::uint32_t N) { return {true, N}; }
  static KernelVerdict no_witness(std::uint32_t depth) { return {false, depth}; }

  bool is_witnessed() const noexcept { return witnessed_; }
  /// N for a witness, the scanned depth otherwise.
  std::uint32_t value() const noexcept { return value_; }

  friend bool operator==(const KernelVerdict &, const KernelVerdict &) = default;

private:
  KernelVerdict(bool w, std::uint32_t v) : witnessed_(w), value_(v) {}
  bool witnessed_;
  std::uint32_t value_;
};

/// True iff collapse_substitute(w_n, N) is trivial for every N <= n <= D.
bool kernel_condition_holds(const TruncatedCoherentSequence &a,
                            std::uint32_t N);

/// Least N <= D satisfying the kernel condition. A no-witness verdict only
/// speaks about this truncation: a kernel element may need N > D.
KernelVerdict ker_theta_scan(const TruncatedCoherentSequence &a);

/// Scan a^-1 b. Throws DepthMismatch.
KernelVerdict ha_equivalent(const TruncatedCoherentSequence &a,
                            const TruncatedCoherentSequence &b);

/// A finite truncation of a point of 2^omega.
class BranchPrefix {
public:
  static constexpr std::size_t max_length = 30;

  BranchPrefix() = default;
  /// Throws InvalidPrefix for non-binary text or length > max_length.
  explicit BranchPrefix(std::string bits);

  const std::string &bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  BranchPrefix truncate(std::size_t n) const { return BranchPrefix(bits_.substr(0, n)); }

  friend auto operator<=>(const BranchPrefix &, const BranchPrefix &) = default;

private:
  std::string bits_;
};

/// Cantor pairing (x + y)(x + y + 1)/2 + y.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);

/// i-th (0-based, increasing) element of the block A^p, p >= 1.
std::uint64_t block_element(std::uint32_t p, std::uint64_t i);

/// (a_p, b_p): the two smallest elements of A^p.
std::pair<std::uint64_t, std::uint64_t> block_anchors(std::uint32_t p);

/// A^p intersected with [1, M], sorted.
std::vector<std::uint64_t> partition_block(std::uint32_t p, std::uint64_t M);

/// Image of a binary string in A^p \ {a_p, b_p}: strings are listed in
/// length-then-lexicographic order and matched with the block in order.
std::uint64_t encode_string(std::uint32_t p, const BranchPrefix &s);

/// Encodings of c|n for n = 0..|c| that are <= M, sorted.
std::vector<std::uint64_t> branch_family(std::uint32_t p, const BranchPrefix &c,
                                         std::uint64_t M);

/// Level-n word of the E_1 gadget: the product over p = 1..P of
/// f^p g_{a_p} g_{b_p}^-1 (f^p)^-1, with f^p the increasing product of the
/// generators in branch_family(p, vec[p-1], n). Letters above n are dropped.
ReducedWord eta_word_at_level(std::span<const BranchPrefix> vec,
                              std::uint32_t n);

TruncatedCoherentSequence eta_element(std::span<const BranchPrefix> vec,
                                      std::uint32_t depth);

/// Largest generator index that eta_word_at_level can produce for `vec`.
std::uint64_t eta_max_index(std::span<const BranchPrefix> vec);

} // namespace wildpi
