#include "wildpi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "wildpi/error.hpp"

namespace wildpi {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error("InvalidJson", what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Wraps nlohmann type errors so callers only ever see wildpi::Error.
template <class F> auto guarded(F &&f) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    bad(e.what());
  }
}

std::vector<std::uint32_t> naturals(const Json &j) {
  return guarded([&] { return j.get<std::vector<std::uint32_t>>(); });
}

} // namespace

Json relation_to_json(const EquivRelation &E) {
  switch (E.variant()) {
  case EquivRelation::Variant::finite_partition:
    return Json{{"variant", "finite-partition"}, {"blocks", E.blocks()}};
  case EquivRelation::Variant::identity:
    return Json{{"variant", "identity"}};
  case EquivRelation::Variant::e0:
    return Json{{"variant", "e0"}};
  }
  return {};
}

EquivRelation relation_from_json(const Json &j) {
  const auto variant = guarded([&] { return field(j, "variant").get<std::string>(); });
  if (variant == "finite-partition")
    return EquivRelation::finite_partition(guarded([&] {
      return field(j, "blocks").get<std::vector<std::vector<std::string>>>();
    }));
  if (variant == "identity")
    return EquivRelation::identity();
  if (variant == "e0")
    return EquivRelation::e0();
  bad("unknown relation variant \"" + variant + "\"");
}

Json tree_to_json(const TreeDesc &t) {
  Json nodes = Json::array();
  for (const auto &s : t.nodes())
    if (!s.empty())
      nodes.push_back(s);
  Json branches = Json::array();
  for (const auto &b : t.branches())
    branches.push_back(Json{{"prefix", b.prefix}, {"period", b.period}});
  return Json{{"nodes", nodes}, {"branches", branches}};
}

TreeDesc tree_from_json(const Json &j) {
  std::set<Node> nodes;
  const auto &jn = field(j, "nodes");
  if (!jn.is_array())
    bad("\"nodes\" must be an array");
  for (const auto &n : jn)
    nodes.insert(naturals(n));
  std::vector<IntSequence> branches;
  if (j.contains("branches")) {
    for (const auto &b : j.at("branches"))
      branches.push_back({naturals(field(b, "prefix")), naturals(field(b, "period"))});
  }
  return TreeDesc(std::move(nodes), std::move(branches));
}

Json vec_to_json(const std::vector<BranchPrefix> &vec) {
  Json prefixes = Json::array();
  for (const auto &p : vec)
    prefixes.push_back(p.bits());
  return Json{{"prefixes", prefixes}};
}

std::vector<BranchPrefix> vec_from_json(const Json &j) {
  const auto raw = guarded([&] {
    return field(j, "prefixes").get<std::vector<std::string>>();
  });
  std::vector<BranchPrefix> out;
  for (const auto &s : raw)
    out.emplace_back(s);
  return out;
}

std::string rational_to_string(const Rational &r) {
  const auto num = numerator(r), den = denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string &s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0)
      bad("zero denominator in \"" + s + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error &) {
    bad("not a rational number: \"" + s + "\"");
  }
}

namespace {

Json segments_to_json(const std::vector<TypeSegment> &segs) {
  Json out = Json::array();
  for (const auto &s : segs)
    out.push_back(Json{{"fiber", s.fiber}, {"to", s.target}});
  return out;
}

std::vector<TypeSegment> segments_from_json(const Json &j) {
  std::vector<TypeSegment> out;
  for (const auto &s : j)
    out.push_back(guarded([&] {
      return TypeSegment{field(s, "fiber").get<std::string>(),
                         field(s, "to").get<std::string>()};
    }));
  return out;
}

} // namespace

Json assembly_to_json(const FiberAssembly &a) {
  Json fibers = Json::object();
  for (const auto &[c, t] : a.fibers)
    fibers[c] = tree_to_json(t);
  Json coords = Json::object();
  for (const auto &[c, p] : a.cprime_coords)
    coords[c] = Json::array({rational_to_string(p.x), rational_to_string(p.y),
                             rational_to_string(p.z)});
  Json z = Json::object();
  for (const auto &[c, v] : a.fiber_z)
    z[c] = rational_to_string(v);
  return Json{{"fiber_depth", a.fiber_depth},
              {"points", a.points},
              {"cprime_points", a.cprime_points},
              {"relation", relation_to_json(a.relation)},
              {"fibers", fibers},
              {"segments_i", segments_to_json(a.segments_i)},
              {"segments_ii", segments_to_json(a.segments_ii)},
              {"cprime_coords", coords},
              {"fiber_z", z}};
}

FiberAssembly assembly_from_json(const Json &j) {
  FiberAssembly a{
      guarded([&] { return field(j, "fiber_depth").get<std::uint32_t>(); }),
      guarded([&] { return field(j, "points").get<std::vector<std::string>>(); }),
      guarded([&] { return field(j, "cprime_points").get<std::vector<std::string>>(); }),
      relation_from_json(field(j, "relation")),
      {},
      segments_from_json(field(j, "segments_i")),
      segments_from_json(field(j, "segments_ii")),
      {},
      {}};
  for (const auto &[c, t] : field(j, "fibers").items())
    a.fibers.emplace(c, tree_from_json(t));
  for (const auto &[c, p] : field(j, "cprime_coords").items()) {
    const auto xyz = guarded([&] { return p.get<std::vector<std::string>>(); });
    if (xyz.size() != 3)
      bad("C' coordinates need three components");
    a.cprime_coords[c] = Point3{rational_from_string(xyz[0]),
                                rational_from_string(xyz[1]),
                                rational_from_string(xyz[2])};
  }
  for (const auto &[c, v] : field(j, "fiber_z").items())
    a.fiber_z[c] = rational_from_string(guarded([&] { return v.get<std::string>(); }));
  return a;
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    bad(e.what());
  }
}

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("IOError", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

} // namespace wildpi
