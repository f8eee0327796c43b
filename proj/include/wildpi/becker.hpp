#pragma once

// Path-component gadgets: the tree gadget K_T, the fibered assembly K over a
// truncated Cantor set, and the cone-plus-circle space L whose loops reduce
// to F(E).
//
// Connectivity is always decided symbolically (branch rule plus incidence
// graphs). Coordinates are exact rationals and only serve export and the
// segment-disjointness check.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wildpi/relcalc.hpp"

namespace wildpi {

using Rational = boost::multiprecision::cpp_rational;

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2 &, const Point2 &) = default;
};

struct Point3 {
  Rational x, y, z;
  friend bool operator==(const Point3 &, const Point3 &) = default;
};

using Node = std::vector<std::uint32_t>;

/// "[]", "[0,2]", ...
std::string node_label(const Node &s);

/// An eventually periodic sequence of naturals, prefix . period^omega.
struct IntSequence {
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> period;

  std::uint32_t at(std::size_t n) const;
  friend bool operator==(const IntSequence &, const IntSequence &) = default;
};

/// A finite tree on omega with a finite set of designated infinite branches.
class TreeDesc {
public:
  /// Adds the root, then checks prefix closure and that every branch runs
  /// through the tree up to its depth. Throws InvalidTree.
  TreeDesc(std::set<Node> nodes, std::vector<IntSequence> branches = {});

  /// The single-node tree {()} without branches.
  static TreeDesc root_only();
  /// () - (0) with the designated branch 0, 0, 0, ...
  static TreeDesc one_branch();

  const std::set<Node> &nodes() const noexcept { return nodes_; }
  const std::vector<IntSequence> &branches() const noexcept { return branches_; }
  bool has_branch() const noexcept { return !branches_.empty(); }
  std::size_t max_depth() const noexcept;

  friend bool operator==(const TreeDesc &, const TreeDesc &) = default;

private:
  std::set<Node> nodes_;
  std::vector<IntSequence> branches_;
};

struct LabeledSegment {
  std::string label;
  Point2 from, to;
};

struct Polyline {
  std::string label;
  std::vector<Point2> vertices; // vertex 0 is r_s
  Rational accumulation_x;      // x-coordinate of l_s
};

struct GadgetGeometry {
  std::vector<LabeledSegment> segments; // base l and verticals l_s
  std::vector<Polyline> polylines;      // one zigzag per rendered node
  std::map<std::string, Point2> marked_points;
};

/// Layout in the unit square. Node s owns a band [x_L, x_R] below height
/// y_top with band height h; its zigzag has vertices
///   x_k = x_R - (x_R - x_L) (2/5)^k,  y_k = y_top (k even), y_top - h/4 (k odd)
/// for k < render_depth, accumulating on the vertical l_s at x = x_R. Child
/// s^i starts at vertex 2i+1 and owns [x_{2i+1}, x_{2i+2}] at a quarter of
/// the height; children that do not fit in render_depth vertices are not
/// drawn. Throws RenderDepthZero.
GadgetGeometry build_gadget(const TreeDesc &t, std::uint32_t render_depth);

/// Symbolic incidence structure of K_T: which primitives touch.
struct GadgetIncidence {
  std::vector<std::string> primitives;
  std::vector<std::pair<std::size_t, std::size_t>> touching;
  /// marked-point label -> primitive it lies on
  std::map<std::string, std::size_t> marked_on;
};

/// Primitives: base "l", verticals "l[s]", zigzags "z[s]", and one limit
/// arc "limit#j" per designated branch joining the zigzags along the branch
/// to the base side.
GadgetIncidence gadget_incidence(const TreeDesc &t);

enum class Side { base = 0, zigzag = 1 };

struct ComponentMap {
  std::size_t components;
  /// Marked points plus "side:base" and "side:zigzag".
  std::map<std::string, int> assignment;

  int component_of(Side s) const {
    return assignment.at(s == Side::base ? "side:base" : "side:zigzag");
  }
};

/// Branch rule: one component when T has a designated branch, otherwise the
/// base/vertical side (containing (0,0)) and the zigzag side (containing
/// (0,1)).
ComponentMap gadget_components(const TreeDesc &t);

/// c0 on even digits, c1 on odd digits. Throws LengthMismatch.
std::string interleave(const std::string &c0, const std::string &c1);
/// (p(c), q(c)): even digits, odd digits.
std::pair<std::string, std::string> split(const std::string &c);

/// Middle-thirds value sum 2 c(i) / 3^{i+1}.
Rational cantor_value(const std::string &c);

/// All binary strings of length n in lexicographic order.
std::vector<std::string> binary_strings(std::size_t n);

struct TypeSegment {
  std::string fiber;  // c
  std::string target; // p(c) for type I, q(c) for type II
  friend bool operator==(const TypeSegment &, const TypeSegment &) = default;
};

/// Depth-d truncation of K. Fibers are indexed by strings c of length d;
/// the auxiliary Cantor set C' and the relation live on strings of length
/// d/2, the range of p and q.
struct FiberAssembly {
  std::uint32_t fiber_depth;
  std::vector<std::string> points;        // fiber labels, length d
  std::vector<std::string> cprime_points; // C' labels, length d/2
  EquivRelation relation;
  std::map<std::string, TreeDesc> fibers;
  std::vector<TypeSegment> segments_i;  // (0,0,c) -> p(c)'
  std::vector<TypeSegment> segments_ii; // (0,1,c) -> q(c)'
  std::map<std::string, Point3> cprime_coords;
  std::map<std::string, Rational> fiber_z; // c -> cantor_value(c)
};

/// T_c has a branch iff p(c) E q(c). Throws OddDepth, InvalidDepth and
/// UniverseMismatch (E must relate every string of length d/2).
FiberAssembly build_assembly(const EquivRelation &E, std::uint32_t d);

/// Path-connectedness of c0' and c1' in K, by reachability in the graph of
/// fiber components and C' points. Throws UnknownPoint.
bool assembly_connected(const FiberAssembly &a, const std::string &c0,
                        const std::string &c1);

/// The connectivity relation on C' as a partition.
EquivRelation assembly_connectivity(const FiberAssembly &a);

enum class SegmentType { type_i, type_ii };

struct CPrimeLocation {
  std::string label;
};
struct SegmentLocation {
  SegmentType type;
  std::string fiber;
};
struct FiberLocation {
  std::string fiber;
  Side side;
};
using Location = std::variant<CPrimeLocation, SegmentLocation, FiberLocation>;

/// A C' label in the same path component as the location. Throws
/// UnknownLocation.
std::string canonical_point(const FiberAssembly &a, const Location &loc);

/// True iff distinct type I/II segments meet at most in a common endpoint
/// on C', checked with exact rational arithmetic.
bool segment_disjointness_check(const FiberAssembly &a);

/// The space L: K x S^1 with a cone on K x {a}, basepoint b.
struct Realization {
  FiberAssembly assembly;
  EquivRelation connectivity; // path components of C' in K
  std::array<Rational, 6> basepoint;
};

Realization build_realization(const EquivRelation &E, std::uint32_t d);

/// Homotopy of loops built from the generators g_c, c in C'. Throws
/// UniverseMismatch for points outside C'.
bool loop_homotopic(const Realization &r, const XWord &w1, const XWord &w2);

} // namespace wildpi
