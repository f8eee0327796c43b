#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wildpi {

/// The generator g_n of the free group F_n, 1-based.
class Generator {
public:
  explicit Generator(std::uint32_t index);

  std::uint32_t index() const noexcept { return index_; }

  friend auto operator<=>(const Generator &, const Generator &) = default;

private:
  std::uint32_t index_;
};

enum class Sign : int { plus = 1, minus = -1 };

inline Sign flip(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

struct Letter {
  Generator gen;
  Sign sign;

  Letter inverse() const noexcept { return {gen, flip(sign)}; }
  /// True iff `*this` followed by `next` freely cancels.
  bool cancels(const Letter &next) const noexcept {
    return gen == next.gen && sign != next.sign;
  }
  /// +n for g_n, -n for g_n^-1.
  long signed_index() const noexcept {
    return static_cast<long>(gen.index()) * static_cast<int>(sign);
  }

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// A finite, possibly unreduced, word in the generators.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Builds a word from signed indices: 3 is g3, -3 is g3^-1.
  static Word from_signed(std::initializer_list<long> idx);
  static Word from_signed(std::span<const long> idx);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

/// A freely reduced word. The only ways to obtain one are `free_reduce`
/// and operations that preserve reducedness, so the invariant always holds.
class ReducedWord {
public:
  ReducedWord() = default; // identity

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word word() const { return Word(letters_); }
  /// Largest generator index used, 0 for the identity.
  std::uint32_t max_index() const noexcept;

  friend bool operator==(const ReducedWord &, const ReducedWord &) = default;

private:
  friend ReducedWord free_reduce(const Word &w);
  friend ReducedWord invert(const ReducedWord &w);
  explicit ReducedWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

ReducedWord free_reduce(const Word &w);
/// Shorthand for free_reduce(Word::from_signed(idx)).
ReducedWord reduced(std::initializer_list<long> idx);

Word concat(const Word &u, const Word &v);
Word invert(const Word &w);
ReducedWord invert(const ReducedWord &w);

ReducedWord multiply_reduced(const ReducedWord &u, const ReducedWord &v);

/// Number of letters g_k^{+-1} in w.
std::size_t occurrence_count(const ReducedWord &w, std::uint32_t k);

/// Image under F -> F_n: delete every generator with index > n and reduce.
/// n = 0 maps everything to the identity.
ReducedWord project(const ReducedWord &w, std::uint32_t n);

/// Commutator [u, v] = u v u^-1 v^-1, reduced.
ReducedWord commutator(const ReducedWord &u, const ReducedWord &v);

} // namespace wildpi
