#include "wildpi/becker.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "wildpi/error.hpp"

namespace wildpi {

std::string node_label(const Node &s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::uint32_t IntSequence::at(std::size_t n) const {
  if (n < prefix.size())
    return prefix[n];
  return period.at((n - prefix.size()) % period.size());
}

TreeDesc::TreeDesc(std::set<Node> nodes, std::vector<IntSequence> branches)
    : nodes_(std::move(nodes)), branches_(std::move(branches)) {
  nodes_.insert(Node{});
  for (const auto &s : nodes_) {
    if (!s.empty() && !nodes_.contains(Node(s.begin(), s.end() - 1)))
      throw Error("InvalidTree", "tree is not prefix-closed at " + node_label(s));
  }
  const std::size_t depth = max_depth();
  for (const auto &b : branches_) {
    if (b.period.empty())
      throw Error("InvalidTree", "designated branches need a nonempty period");
    Node s;
    for (std::size_t n = 0; n < depth; ++n) {
      s.push_back(b.at(n));
      if (!nodes_.contains(s))
        throw Error("InvalidTree", "designated branch leaves the tree at " +
                                       node_label(s));
    }
  }
}

TreeDesc TreeDesc::root_only() { return TreeDesc({Node{}}); }

TreeDesc TreeDesc::one_branch() {
  return TreeDesc({Node{}, Node{0}}, {IntSequence{{}, {0}}});
}

std::size_t TreeDesc::max_depth() const noexcept {
  std::size_t d = 0;
  for (const auto &s : nodes_)
    d = std::max(d, s.size());
  return d;
}

namespace {

struct Band {
  Rational x_left, x_right, y_top, height;
};

void layout_node(const TreeDesc &t, const Node &s, const Band &band,
                 std::uint32_t render_depth, GadgetGeometry &g) {
  const std::string label = node_label(s);
  const Rational span = band.x_right - band.x_left;
  const Rational ratio(2, 5);

  Polyline zig{"z" + label, {}, band.x_right};
  Rational shrink = 1;
  for (std::uint32_t k = 0; k < render_depth; ++k) {
    const Rational x = band.x_right - span * shrink;
    const Rational y = k % 2 == 0 ? band.y_top : band.y_top - band.height / 4;
    zig.vertices.push_back({x, y});
    shrink *= ratio;
  }
  g.marked_points["r" + label] = zig.vertices.front();

  const Point2 foot{band.x_right, 0}, top{band.x_right, band.y_top};
  g.segments.push_back({"l" + label, foot, top});
  g.marked_points["l" + label + "_bottom"] = foot;
  g.marked_points["l" + label + "_top"] = top;

  // Descendants of s follow s contiguously in lexicographic order.
  for (auto it = t.nodes().upper_bound(s); it != t.nodes().end(); ++it) {
    const Node &child = *it;
    if (child.size() <= s.size() || !std::equal(s.begin(), s.end(), child.begin()))
      break;
    if (child.size() != s.size() + 1)
      continue;
    const std::size_t first = 2 * static_cast<std::size_t>(child.back()) + 1;
    if (first + 1 >= zig.vertices.size())
      continue;
    Band sub{zig.vertices[first].x, zig.vertices[first + 1].x,
             band.y_top - band.height / 4, band.height / 4};
    layout_node(t, child, sub, render_depth, g);
  }
  g.polylines.push_back(std::move(zig));
}

} // namespace

GadgetGeometry build_gadget(const TreeDesc &t, std::uint32_t render_depth) {
  if (render_depth == 0)
    throw Error("RenderDepthZero", "render depth must be positive");
  GadgetGeometry g;
  g.segments.push_back({"l", {0, 0}, {1, 0}});
  g.marked_points["corner(0,0)"] = {0, 0};
  g.marked_points["corner(0,1)"] = {0, 1};
  layout_node(t, Node{}, Band{0, 1, 1, 1}, render_depth, g);
  std::sort(g.polylines.begin(), g.polylines.end(),
            [](const Polyline &a, const Polyline &b) { return a.label < b.label; });
  return g;
}

GadgetIncidence gadget_incidence(const TreeDesc &t) {
  GadgetIncidence inc;
  auto add = [&](std::string name) {
    inc.primitives.push_back(std::move(name));
    return inc.primitives.size() - 1;
  };
  const auto base = add("l");
  inc.marked_on["corner(0,0)"] = base;

  std::map<Node, std::size_t> zig;
  for (const auto &s : t.nodes()) {
    const auto label = node_label(s);
    const auto vertical = add("l" + label);
    const auto z = add("z" + label);
    zig[s] = z;
    inc.touching.emplace_back(vertical, base); // foot of l_s on l
    inc.marked_on["l" + label + "_bottom"] = vertical;
    inc.marked_on["l" + label + "_top"] = vertical;
    inc.marked_on["r" + label] = z;
    if (!s.empty()) // r_s lies on the parent's zigzag
      inc.touching.emplace_back(z, zig.at(Node(s.begin(), s.end() - 1)));
  }
  inc.marked_on["corner(0,1)"] = zig.at(Node{});

  // Along a branch the zigzags shrink to a point of the base side; the arc
  // through them is the only bridge between the two sides.
  for (std::size_t j = 0; j < t.branches().size(); ++j) {
    const auto limit = add("limit#" + std::to_string(j));
    Node s;
    std::size_t deepest = zig.at(s);
    for (std::size_t n = 0; n < t.max_depth(); ++n) {
      s.push_back(t.branches()[j].at(n));
      deepest = zig.at(s);
    }
    inc.touching.emplace_back(limit, deepest);
    inc.touching.emplace_back(limit, base);
  }
  return inc;
}

ComponentMap gadget_components(const TreeDesc &t) {
  const bool connected = t.has_branch();
  const int base = 0, zigzag = connected ? 0 : 1;
  ComponentMap m{connected ? 1u : 2u, {}};
  m.assignment["side:base"] = base;
  m.assignment["side:zigzag"] = zigzag;
  m.assignment["corner(0,0)"] = base;
  m.assignment["corner(0,1)"] = zigzag;
  for (const auto &s : t.nodes()) {
    const auto label = node_label(s);
    m.assignment["l" + label + "_bottom"] = base;
    m.assignment["l" + label + "_top"] = base;
    m.assignment["r" + label] = zigzag;
  }
  return m;
}

std::string interleave(const std::string &c0, const std::string &c1) {
  if (c0.size() != c1.size())
    throw Error("LengthMismatch", "interleaved strings need equal lengths");
  std::string out;
  out.reserve(2 * c0.size());
  for (std::size_t i = 0; i < c0.size(); ++i) {
    out += c0[i];
    out += c1[i];
  }
  return out;
}

std::pair<std::string, std::string> split(const std::string &c) {
  std::string p, q;
  for (std::size_t i = 0; i < c.size(); ++i)
    (i % 2 == 0 ? p : q) += c[i];
  return {p, q};
}

Rational cantor_value(const std::string &c) {
  Rational v = 0, scale(1, 3);
  for (char b : c) {
    if (b == '1')
      v += 2 * scale;
    scale /= 3;
  }
  return v;
}

std::vector<std::string> binary_strings(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (v >> (n - 1 - i) & 1)
        s[i] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

FiberAssembly build_assembly(const EquivRelation &E, std::uint32_t d) {
  if (d % 2 != 0)
    throw Error("OddDepth", "fiber depth must be even so p and q are total");
  if (d == 0 || d > 20)
    throw Error("InvalidDepth", "fiber depth must lie in [2, 20]");

  FiberAssembly a{d, binary_strings(d), binary_strings(d / 2), E, {}, {}, {}, {}, {}};
  for (const auto &c : a.cprime_points) {
    const Point pt = Point::atom(c);
    E.check_point(pt);
    a.cprime_coords[c] = Point3{Rational(-1, 2) - cantor_value(c), Rational(1, 2), 0};
  }
  for (const auto &c : a.points) {
    const auto [p, q] = split(c);
    const bool branch = E.related(Point::atom(p), Point::atom(q));
    a.fibers.emplace(c, branch ? TreeDesc::one_branch() : TreeDesc::root_only());
    a.segments_i.push_back({c, p});
    a.segments_ii.push_back({c, q});
    a.fiber_z[c] = cantor_value(c);
  }
  return a;
}

namespace {

// Reachability graph: C' points first, then two side nodes per fiber
// (merged when the fiber gadget is connected).
struct AssemblyGraph {
  std::map<std::string, std::size_t> cprime;
  std::vector<std::vector<std::size_t>> adj;

  explicit AssemblyGraph(const FiberAssembly &a) {
    for (const auto &c : a.cprime_points)
      cprime.emplace(c, cprime.size());
    adj.resize(cprime.size());

    std::map<std::string, std::array<std::size_t, 2>> side_node;
    for (const auto &[c, tree] : a.fibers) {
      const auto comps = gadget_components(tree);
      std::array<std::size_t, 2> ids{};
      std::map<int, std::size_t> by_component;
      for (Side s : {Side::base, Side::zigzag}) {
        const int comp = comps.component_of(s);
        auto it = by_component.find(comp);
        if (it == by_component.end()) {
          it = by_component.emplace(comp, adj.size()).first;
          adj.emplace_back();
        }
        ids[static_cast<std::size_t>(s)] = it->second;
      }
      side_node[c] = ids;
    }
    auto link = [&](std::size_t u, std::size_t v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    };
    for (const auto &s : a.segments_i)
      link(cprime.at(s.target), side_node.at(s.fiber)[0]);
    for (const auto &s : a.segments_ii)
      link(cprime.at(s.target), side_node.at(s.fiber)[1]);
  }

  std::vector<bool> reach(std::size_t from) const {
    std::vector<bool> seen(adj.size(), false);
    std::deque<std::size_t> todo{from};
    seen[from] = true;
    while (!todo.empty()) {
      auto u = todo.front();
      todo.pop_front();
      for (auto v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          todo.push_back(v);
        }
    }
    return seen;
  }
};

std::size_t cprime_index(const AssemblyGraph &g, const std::string &c) {
  auto it = g.cprime.find(c);
  if (it == g.cprime.end())
    throw Error("UnknownPoint", "'" + c + "' is not a point of C'");
  return it->second;
}

} // namespace

bool assembly_connected(const FiberAssembly &a, const std::string &c0,
                        const std::string &c1) {
  const AssemblyGraph g(a);
  return g.reach(cprime_index(g, c0))[cprime_index(g, c1)];
}

EquivRelation assembly_connectivity(const FiberAssembly &a) {
  const AssemblyGraph g(a);
  std::vector<bool> placed(a.cprime_points.size(), false);
  std::vector<std::vector<std::string>> blocks;
  for (std::size_t i = 0; i < a.cprime_points.size(); ++i) {
    if (placed[i])
      continue;
    const auto seen = g.reach(i);
    std::vector<std::string> block;
    for (std::size_t j = 0; j < a.cprime_points.size(); ++j)
      if (seen[j]) {
        placed[j] = true;
        block.push_back(a.cprime_points[j]);
      }
    blocks.push_back(std::move(block));
  }
  return EquivRelation::finite_partition(std::move(blocks));
}

std::string canonical_point(const FiberAssembly &a, const Location &loc) {
  auto fiber_split = [&](const std::string &c) {
    if (!a.fibers.contains(c))
      throw Error("UnknownLocation", "no fiber labelled '" + c + "'");
    return split(c);
  };
  if (const auto *cp = std::get_if<CPrimeLocation>(&loc)) {
    if (!a.cprime_coords.contains(cp->label))
      throw Error("UnknownLocation", "'" + cp->label + "' is not a point of C'");
    return cp->label;
  }
  if (const auto *seg = std::get_if<SegmentLocation>(&loc)) {
    const auto &list = seg->type == SegmentType::type_i ? a.segments_i : a.segments_ii;
    for (const auto &s : list)
      if (s.fiber == seg->fiber)
        return s.target;
    throw Error("UnknownLocation", "no segment from fiber '" + seg->fiber + "'");
  }
  const auto &f = std::get<FiberLocation>(loc);
  const auto [p, q] = fiber_split(f.fiber);
  return f.side == Side::base ? p : q;
}

namespace {

struct Vec3 {
  Rational x, y, z;
};

Vec3 sub(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Rational dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const Vec3 &v) { return v.x == 0 && v.y == 0 && v.z == 0; }
Point3 along(const Point3 &p, const Vec3 &d, const Rational &t) {
  return {p.x + t * d.x, p.y + t * d.y, p.z + t * d.z};
}

struct Seg3 {
  Point3 from; // fiber corner
  Point3 to;   // C' endpoint
};

enum class Meet { none, point, overlap };

// Exact intersection of two closed segments in R^3.
std::pair<Meet, Point3> intersect(const Seg3 &s1, const Seg3 &s2) {
  const Vec3 d1 = sub(s1.to, s1.from), d2 = sub(s2.to, s2.from);
  const Vec3 r = sub(s2.from, s1.from);
  const Vec3 n = cross(d1, d2);
  if (!is_zero(n)) {
    if (dot(r, n) != 0)
      return {Meet::none, {}};
    const Rational nn = dot(n, n);
    const Rational t = dot(cross(r, d2), n) / nn;
    const Rational s = dot(cross(r, d1), n) / nn;
    if (t < 0 || t > 1 || s < 0 || s > 1)
      return {Meet::none, {}};
    return {Meet::point, along(s1.from, d1, t)};
  }
  if (!is_zero(cross(r, d1)))
    return {Meet::none, {}};
  const Rational len = dot(d1, d1);
  Rational t0 = dot(r, d1) / len;
  Rational t1 = dot(sub(s2.to, s1.from), d1) / len;
  if (t0 > t1)
    std::swap(t0, t1);
  const Rational lo = std::max(Rational(0), t0), hi = std::min(Rational(1), t1);
  if (lo > hi)
    return {Meet::none, {}};
  if (lo == hi)
    return {Meet::point, along(s1.from, d1, lo)};
  return {Meet::overlap, {}};
}

} // namespace

bool segment_disjointness_check(const FiberAssembly &a) {
  std::vector<Seg3> segs;
  for (const auto &s : a.segments_i)
    segs.push_back({Point3{0, 0, a.fiber_z.at(s.fiber)}, a.cprime_coords.at(s.target)});
  for (const auto &s : a.segments_ii)
    segs.push_back({Point3{0, 1, a.fiber_z.at(s.fiber)}, a.cprime_coords.at(s.target)});

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto [meet, at] = intersect(segs[i], segs[j]);
      if (meet == Meet::none)
        continue;
      if (meet == Meet::overlap)
        return false;
      if (!(at == segs[i].to && at == segs[j].to))
        return false;
    }
  }
  return true;
}

Realization build_realization(const EquivRelation &E, std::uint32_t d) {
  auto assembly = build_assembly(E, d);
  auto connectivity = assembly_connectivity(assembly);
  return Realization{std::move(assembly), std::move(connectivity),
                     {0, 0, 0, 0, 0, 1}};
}

bool loop_homotopic(const Realization &r, const XWord &w1, const XWord &w2) {
  return fe_equivalent(r.connectivity, w1, w2);
}

} // namespace wildpi
