#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wildpi/word.hpp"

namespace wildpi {

/// A point of the universe X: a named atom or an eventually periodic
/// binary sequence prefix.period^omega.
///
/// Sequence points are stored normalized (primitive period, shortest
/// prefix), so structural equality is equality of sequences.
class Point {
public:
  enum class Kind { atom, sequence };

  static Point atom(std::string id);
  /// Throws InvalidPoint for an empty period or non-binary digits.
  static Point sequence(std::string prefix, std::string period);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::atom; }
  /// Atom id; empty for sequences.
  const std::string &id() const noexcept { return id_; }
  const std::string &prefix() const noexcept { return prefix_; }
  const std::string &period() const noexcept { return period_; }
  /// Digit n (0-based) of a sequence point.
  char bit(std::size_t n) const;

  friend auto operator<=>(const Point &, const Point &) = default;

private:
  Point() = default;
  Kind kind_ = Kind::atom;
  std::string id_;
  std::string prefix_;
  std::string period_;
};

std::string to_string(const Point &p);

struct XLetter {
  Point point;
  Sign sign;

  XLetter inverse() const { return {point, flip(sign)}; }
  friend bool operator==(const XLetter &, const XLetter &) = default;
};

/// A word over X x {-1, 1}; may be unreduced.
using XWord = std::vector<XLetter>;

/// A decidable equivalence relation E on a point universe.
class EquivRelation {
public:
  enum class Variant { finite_partition, identity, e0 };

  /// Throws InvalidRelation when blocks overlap or are empty.
  static EquivRelation finite_partition(std::vector<std::vector<std::string>> blocks);
  /// Every atom in one block.
  static EquivRelation full(std::vector<std::string> atoms);
  static EquivRelation identity();
  /// Eventual agreement of binary sequences.
  static EquivRelation e0();

  Variant variant() const noexcept { return variant_; }
  const std::vector<std::vector<std::string>> &blocks() const noexcept {
    return blocks_;
  }

  /// Throws UniverseMismatch when p is not a point of this relation's X.
  void check_point(const Point &p) const;
  /// Also rejects words that mix atoms and sequences.
  void check_word(const XWord &w) const;

  bool related(const Point &x, const Point &y) const;
  /// Least atom id of x's class. Throws NoCanonicalRep for E0.
  Point representative(const Point &x) const;

private:
  explicit EquivRelation(Variant v) : variant_(v) {}

  Variant variant_;
  std::vector<std::vector<std::string>> blocks_;
  std::map<std::string, std::size_t> block_of_;
};

/// x E y, after checking both points belong to E's universe.
bool e_related(const EquivRelation &E, const Point &x, const Point &y);

/// An element of F'(X): no adjacent x^e y^-e with x E y.
class NormalWord {
public:
  const XWord &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const NormalWord &, const NormalWord &) = default;

private:
  friend NormalWord e_normal_form(const EquivRelation &, const XWord &);
  explicit NormalWord(XWord w) : letters_(std::move(w)) {}
  XWord letters_;
};

/// True iff w has no adjacent E-cancelling pair.
bool is_normal(const EquivRelation &E, const XWord &w);

/// Delete the leftmost adjacent E-cancelling pair until none is left.
NormalWord e_normal_form(const EquivRelation &E, const XWord &w);

/// Decides u F(E) v, i.e. u N_E = v N_E.
bool fe_equivalent(const EquivRelation &E, const XWord &u, const XWord &v);

/// Product in the free group F(X): exact cancellation only.
XWord fx_multiply(const XWord &u, const XWord &v);
XWord fx_invert(const XWord &u);
XWord fx_reduce(const XWord &u);

XWord embed_point(const Point &x);

/// Equality in the disjoint union of (E x 2)^n: same length, same signs,
/// pointwise related. Throws NotNormal unless both words are in F'(X).
bool product_view_equal(const EquivRelation &E, const XWord &u,
                        const XWord &v);

/// Normal form with each point replaced by its class representative, i.e.
/// the image in F(X/E). Throws NoCanonicalRep for E0.
XWord quotient_word(const EquivRelation &E, const XWord &u);

} // namespace wildpi
