#include "wildpi/archipelago.hpp"

#include <algorithm>

#include "wildpi/error.hpp"

namespace wildpi {

ReducedWord collapse_substitute(const ReducedWord &w, std::uint32_t N) {
  if (N == 0)
    throw Error("InvalidGenerator", "collapse target must be at least 1");
  std::vector<Letter> out;
  out.reserve(w.size());
  const Generator target(N);
  for (const auto &l : w.letters())
    out.push_back(l.gen.index() < N ? Letter{target, l.sign} : l);
  return free_reduce(Word(std::move(out)));
}

bool kernel_condition_holds(const TruncatedCoherentSequence &a,
                            std::uint32_t N) {
  if (N == 0 || N > a.depth())
    return false;
  for (std::uint32_t n = N; n <= a.depth(); ++n)
    if (!collapse_substitute(a.level(n), N).empty())
      return false;
  return true;
}

KernelVerdict ker_theta_scan(const TruncatedCoherentSequence &a) {
  for (std::uint32_t N = 1; N <= a.depth(); ++N)
    if (kernel_condition_holds(a, N))
      return KernelVerdict::witnessed(N);
  return KernelVerdict::no_witness(a.depth());
}

KernelVerdict ha_equivalent(const TruncatedCoherentSequence &a,
                            const TruncatedCoherentSequence &b) {
  return ker_theta_scan(seq_multiply(seq_invert(a), b));
}

BranchPrefix::BranchPrefix(std::string bits) : bits_(std::move(bits)) {
  if (bits_.size() > max_length)
    throw Error("InvalidPrefix", "branch prefixes are limited to " +
                                     std::to_string(max_length) + " bits");
  if (bits_.find_first_not_of("01") != std::string::npos)
    throw Error("InvalidPrefix", "branch prefix '" + bits_ + "' is not binary");
}

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t s = x + y;
  return s * (s + 1) / 2 + y;
}

std::uint64_t block_element(std::uint32_t p, std::uint64_t i) {
  if (p == 0)
    throw Error("InvalidBlock", "blocks are numbered from 1");
  return cantor_pair(p - 1, i) + 1;
}

std::pair<std::uint64_t, std::uint64_t> block_anchors(std::uint32_t p) {
  return {block_element(p, 0), block_element(p, 1)};
}

std::vector<std::uint64_t> partition_block(std::uint32_t p, std::uint64_t M) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0;; ++i) {
    const auto m = block_element(p, i);
    if (m > M)
      break;
    out.push_back(m);
  }
  return out;
}

std::uint64_t encode_string(std::uint32_t p, const BranchPrefix &s) {
  std::uint64_t value = 0;
  for (char b : s.bits())
    value = 2 * value + static_cast<std::uint64_t>(b - '0');
  const std::uint64_t rank = ((std::uint64_t{1} << s.size()) - 1) + value;
  return block_element(p, rank + 2);
}

std::vector<std::uint64_t> branch_family(std::uint32_t p, const BranchPrefix &c,
                                         std::uint64_t M) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= c.size(); ++n) {
    const auto m = encode_string(p, c.truncate(n));
    if (m <= M)
      out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReducedWord eta_word_at_level(std::span<const BranchPrefix> vec,
                              std::uint32_t n) {
  std::vector<Letter> letters;
  for (std::uint32_t p = 1; p <= vec.size(); ++p) {
    const auto family = branch_family(p, vec[p - 1], n);
    const auto [a, b] = block_anchors(p);
    std::vector<Letter> f;
    for (auto m : family)
      f.push_back({Generator(static_cast<std::uint32_t>(m)), Sign::plus});
    letters.insert(letters.end(), f.begin(), f.end());
    if (a <= n)
      letters.push_back({Generator(static_cast<std::uint32_t>(a)), Sign::plus});
    if (b <= n)
      letters.push_back({Generator(static_cast<std::uint32_t>(b)), Sign::minus});
    for (auto it = f.rbegin(); it != f.rend(); ++it)
      letters.push_back(it->inverse());
  }
  return free_reduce(Word(std::move(letters)));
}

TruncatedCoherentSequence eta_element(std::span<const BranchPrefix> vec,
                                      std::uint32_t depth) {
  std::vector<ReducedWord> levels;
  levels.reserve(depth);
  for (std::uint32_t n = 1; n <= depth; ++n)
    levels.push_back(eta_word_at_level(vec, n));
  return validate_coherent(std::move(levels));
}

std::uint64_t eta_max_index(std::span<const BranchPrefix> vec) {
  std::uint64_t m = 0;
  for (std::uint32_t p = 1; p <= vec.size(); ++p) {
    m = std::max(m, block_anchors(p).second);
    m = std::max(m, encode_string(p, vec[p - 1]));
  }
  return m;
}

} // namespace wildpi
