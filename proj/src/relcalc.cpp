#include "wildpi/relcalc.hpp"

#include <algorithm>
#include <numeric>

#include "wildpi/error.hpp"

namespace wildpi {

namespace {

bool is_binary(const std::string &s) {
  return s.find_first_not_of("01") == std::string::npos;
}

// Smallest d dividing |s| with s = (s[0:d])^(|s|/d).
std::string primitive_root(const std::string &s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i)
      ok = s[i] == s[i - d];
    if (ok)
      return s.substr(0, d);
  }
  return s;
}

} // namespace

Point Point::atom(std::string id) {
  if (id.empty())
    throw Error("InvalidPoint", "atom ids must be nonempty");
  Point p;
  p.kind_ = Kind::atom;
  p.id_ = std::move(id);
  return p;
}

Point Point::sequence(std::string prefix, std::string period) {
  if (period.empty())
    throw Error("InvalidPoint", "sequence period must be nonempty");
  if (!is_binary(prefix) || !is_binary(period))
    throw Error("InvalidPoint", "sequence digits must be 0 or 1");
  period = primitive_root(period);
  // Absorb the prefix tail into the period: x (y p)^w == (x y) (p y)^w.
  while (!prefix.empty() && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
  Point p;
  p.kind_ = Kind::sequence;
  p.prefix_ = std::move(prefix);
  p.period_ = std::move(period);
  return p;
}

char Point::bit(std::size_t n) const {
  if (kind_ != Kind::sequence)
    throw Error("UniverseMismatch", "atom '" + id_ + "' has no digits");
  if (n < prefix_.size())
    return prefix_[n];
  return period_[(n - prefix_.size()) % period_.size()];
}

std::string to_string(const Point &p) {
  if (p.is_atom())
    return "'" + p.id() + "'";
  return "seq(" + p.prefix() + "," + p.period() + ")";
}

EquivRelation
EquivRelation::finite_partition(std::vector<std::vector<std::string>> blocks) {
  EquivRelation E(Variant::finite_partition);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error("InvalidRelation", "partition blocks must be nonempty");
    for (const auto &id : blocks[b])
      if (!E.block_of_.emplace(id, b).second)
        throw Error("InvalidRelation", "atom '" + id + "' lies in two blocks");
  }
  E.blocks_ = std::move(blocks);
  return E;
}

EquivRelation EquivRelation::full(std::vector<std::string> atoms) {
  return finite_partition({std::move(atoms)});
}

EquivRelation EquivRelation::identity() { return EquivRelation(Variant::identity); }

EquivRelation EquivRelation::e0() { return EquivRelation(Variant::e0); }

void EquivRelation::check_point(const Point &p) const {
  switch (variant_) {
  case Variant::finite_partition:
    if (!p.is_atom() || !block_of_.contains(p.id()))
      throw Error("UniverseMismatch",
                  to_string(p) + " is not an atom of the partition");
    return;
  case Variant::e0:
    if (p.is_atom())
      throw Error("UniverseMismatch",
                  "E0 relates binary sequences, not atom " + to_string(p));
    return;
  case Variant::identity:
    return;
  }
}

void EquivRelation::check_word(const XWord &w) const {
  for (const auto &l : w) {
    check_point(l.point);
    if (l.point.kind() != w.front().point.kind())
      throw Error("UniverseMismatch", "word mixes atoms and sequences");
  }
}

bool EquivRelation::related(const Point &x, const Point &y) const {
  switch (variant_) {
  case Variant::identity:
    return x == y;
  case Variant::finite_partition:
    return block_of_.at(x.id()) == block_of_.at(y.id());
  case Variant::e0: {
    // Beyond both prefixes the pair of digits repeats with period lcm.
    const std::size_t start = std::max(x.prefix().size(), y.prefix().size());
    const std::size_t window = std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = start; i < start + window; ++i)
      if (x.bit(i) != y.bit(i))
        return false;
    return true;
  }
  }
  return false;
}

Point EquivRelation::representative(const Point &x) const {
  switch (variant_) {
  case Variant::identity:
    return x;
  case Variant::finite_partition: {
    const auto &block = blocks_[block_of_.at(x.id())];
    return Point::atom(*std::min_element(block.begin(), block.end()));
  }
  case Variant::e0:
    break;
  }
  throw Error("NoCanonicalRep", "E0 classes have no computable representative");
}

bool e_related(const EquivRelation &E, const Point &x, const Point &y) {
  E.check_point(x);
  E.check_point(y);
  if (x.kind() != y.kind())
    throw Error("UniverseMismatch", "cannot compare an atom with a sequence");
  return E.related(x, y);
}

namespace {

bool e_cancels(const EquivRelation &E, const XLetter &l, const XLetter &r) {
  return l.sign != r.sign && E.related(l.point, r.point);
}

} // namespace

bool is_normal(const EquivRelation &E, const XWord &w) {
  E.check_word(w);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (e_cancels(E, w[i - 1], w[i]))
      return false;
  return true;
}

// A stack scan deletes exactly the leftmost redex at every step: the stack
// holds a redex-free prefix, so the first redex straddles its top.
NormalWord e_normal_form(const EquivRelation &E, const XWord &w) {
  E.check_word(w);
  XWord stack;
  stack.reserve(w.size());
  for (const auto &l : w) {
    if (!stack.empty() && e_cancels(E, stack.back(), l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return NormalWord(std::move(stack));
}

namespace {

bool pointwise_equal(const EquivRelation &E, const XWord &u, const XWord &v) {
  if (u.size() != v.size())
    return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].sign != v[i].sign || !E.related(u[i].point, v[i].point))
      return false;
  return true;
}

} // namespace

bool fe_equivalent(const EquivRelation &E, const XWord &u, const XWord &v) {
  const auto nu = e_normal_form(E, u);
  const auto nv = e_normal_form(E, v);
  if (!nu.empty() && !nv.empty() &&
      nu.letters().front().point.kind() != nv.letters().front().point.kind())
    throw Error("UniverseMismatch", "words use different universes");
  return pointwise_equal(E, nu.letters(), nv.letters());
}

XWord fx_reduce(const XWord &u) {
  XWord stack;
  stack.reserve(u.size());
  for (const auto &l : u) {
    if (!stack.empty() && stack.back().point == l.point &&
        stack.back().sign != l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

XWord fx_multiply(const XWord &u, const XWord &v) {
  XWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return fx_reduce(w);
}

XWord fx_invert(const XWord &u) {
  XWord out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    out.push_back(it->inverse());
  return fx_reduce(out);
}

XWord embed_point(const Point &x) { return {XLetter{x, Sign::plus}}; }

bool product_view_equal(const EquivRelation &E, const XWord &u,
                        const XWord &v) {
  if (!is_normal(E, u) || !is_normal(E, v))
    throw Error("NotNormal", "product-view equality needs words in F'(X)");
  return pointwise_equal(E, u, v);
}

XWord quotient_word(const EquivRelation &E, const XWord &u) {
  if (E.variant() == EquivRelation::Variant::e0)
    throw Error("NoCanonicalRep", "E0 classes have no computable representative");
  XWord out = e_normal_form(E, u).letters();
  for (auto &l : out)
    l.point = E.representative(l.point);
  return out;
}

} // namespace wildpi
