#include "wildpi/word.hpp"

#include <algorithm>
#include <string>

#include "wildpi/error.hpp"

namespace wildpi {

Generator::Generator(std::uint32_t index) : index_(index) {
  if (index == 0)
    throw Error("InvalidGenerator", "generator indices start at 1");
}

Word Word::from_signed(std::initializer_list<long> idx) {
  return from_signed(std::span<const long>(idx.begin(), idx.size()));
}

Word Word::from_signed(std::span<const long> idx) {
  std::vector<Letter> out;
  out.reserve(idx.size());
  for (long i : idx) {
    if (i == 0)
      throw Error("InvalidGenerator", "generator indices start at 1");
    out.push_back({Generator(static_cast<std::uint32_t>(i < 0 ? -i : i)),
                   i < 0 ? Sign::minus : Sign::plus});
  }
  return Word(std::move(out));
}

std::uint32_t ReducedWord::max_index() const noexcept {
  std::uint32_t m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.gen.index());
  return m;
}

// Single left-to-right stack scan.
ReducedWord free_reduce(const Word &w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto &l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return ReducedWord(std::move(stack));
}

ReducedWord reduced(std::initializer_list<long> idx) {
  return free_reduce(Word::from_signed(idx));
}

Word concat(const Word &u, const Word &v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word invert(const Word &w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

ReducedWord invert(const ReducedWord &w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return ReducedWord(std::move(out));
}

ReducedWord multiply_reduced(const ReducedWord &u, const ReducedWord &v) {
  return free_reduce(concat(u.word(), v.word()));
}

std::size_t occurrence_count(const ReducedWord &w, std::uint32_t k) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(),
                    [k](const Letter &l) { return l.gen.index() == k; }));
}

ReducedWord project(const ReducedWord &w, std::uint32_t n) {
  std::vector<Letter> kept;
  kept.reserve(w.size());
  for (const auto &l : w.letters())
    if (l.gen.index() <= n)
      kept.push_back(l);
  return free_reduce(Word(std::move(kept)));
}

ReducedWord commutator(const ReducedWord &u, const ReducedWord &v) {
  return multiply_reduced(multiply_reduced(u, v),
                          multiply_reduced(invert(u), invert(v)));
}

} // namespace wildpi
