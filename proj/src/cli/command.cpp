#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "wildpi/archipelago.hpp"
#include "wildpi/becker.hpp"
#include "wildpi/cli.hpp"
#include "wildpi/svg.hpp"

namespace wildpi::cli {

namespace {

struct Options {
  std::uint32_t depth = 0;
  std::uint32_t level = 0;
  std::string relation;
  std::string tree;
  std::string svg;
  std::string word;
  std::vector<std::string> inputs;
  bool json = false;
};

using Handler = std::function<CommandResult()>;

CommandResult ok(Json payload, std::string summary) {
  return {0, std::move(payload), std::move(summary)};
}

void need(bool condition, const std::string &what) {
  if (!condition)
    throw CLI::ValidationError(what);
}

ReducedWord word_arg(const std::string &text) {
  return free_reduce(to_word(parse_word(text)));
}

XWord xword_arg(const std::string &text) { return to_xword(parse_word(text)); }

Json verdict_json(const KernelVerdict &v) {
  if (v.is_witnessed())
    return Json{{"verdict", "witnessed"}, {"N", v.value()}};
  return Json{{"verdict", "no-witness"}, {"depth", v.value()}};
}

std::string verdict_summary(const KernelVerdict &v) {
  if (v.is_witnessed())
    return "witnessed at N = " + std::to_string(v.value());
  return "no witness up to depth " + std::to_string(v.value());
}

// Either --word with --depth, or a sequence file as the single input.
TruncatedCoherentSequence sequence_input(const Options &o) {
  if (!o.word.empty()) {
    need(o.inputs.empty(), "give either --word or a sequence file, not both");
    need(o.depth > 0, "--word needs --depth");
    return embed_word(word_arg(o.word), o.depth);
  }
  need(o.inputs.size() == 1, "expected one sequence file or --word");
  return sequence_from_json(load_json_file(o.inputs[0]));
}

CommandResult cmd_reduce(const Options &o) {
  need(o.inputs.size() == 1, "reduce takes one word");
  const auto w = format_word(word_arg(o.inputs[0]));
  return ok(Json{{"word", w}}, w);
}

CommandResult cmd_project(const Options &o) {
  need(o.inputs.size() == 1, "project takes one word");
  need(o.level > 0, "--level must be at least 1");
  const auto w = format_word(project(word_arg(o.inputs[0]), o.level));
  return ok(Json{{"level", o.level}, {"word", w}}, w);
}

CommandResult cmd_earring_check(const Options &o) {
  const auto seq = sequence_input(o);
  const auto report = stabilization_report(seq);
  const auto verdict = in_image_up_to_depth(seq);
  Json counts = Json::array();
  for (const auto &g : report.generators) {
    counts.push_back(Json{{"generator", g.generator},
                          {"counts", g.counts},
                          {"witness", g.witness ? Json(*g.witness) : Json(nullptr)}});
  }
  Json witnesses = Json::object();
  for (const auto &[k, n] : verdict.witnesses)
    witnesses[std::to_string(k)] = n;
  Json payload{{"depth", report.depth},
               {"consistent", verdict.consistent},
               {"witnesses", witnesses},
               {"unstable", verdict.unstable},
               {"generators", counts}};
  std::string summary = verdict.consistent
                            ? "consistent with membership up to depth " +
                                  std::to_string(report.depth)
                            : "not stabilized for " +
                                  std::to_string(verdict.unstable.size()) +
                                  " generator(s)";
  return ok(std::move(payload), std::move(summary));
}

CommandResult cmd_earring_tower(const Options &o) {
  need(o.depth > 0, "--depth must be at least 1");
  const auto seq = commutator_tower(o.depth);
  return ok(sequence_to_json(seq), format_word(seq.level(o.depth)));
}

CommandResult cmd_ha_kernel(const Options &o) {
  const auto v = ker_theta_scan(sequence_input(o));
  return ok(verdict_json(v), verdict_summary(v));
}

CommandResult cmd_ha_equiv(const Options &o) {
  need(o.inputs.size() == 2, "ha equiv takes two words or two sequence files");
  TruncatedCoherentSequence a = TruncatedCoherentSequence::identity(1);
  TruncatedCoherentSequence b = a;
  if (o.depth > 0) {
    a = embed_word(word_arg(o.inputs[0]), o.depth);
    b = embed_word(word_arg(o.inputs[1]), o.depth);
  } else {
    a = sequence_from_json(load_json_file(o.inputs[0]));
    b = sequence_from_json(load_json_file(o.inputs[1]));
  }
  const auto v = ha_equivalent(a, b);
  return ok(verdict_json(v), verdict_summary(v));
}

CommandResult cmd_ha_eta(const Options &o) {
  need(o.inputs.size() == 1, "ha eta takes one prefix-vector file");
  const auto vec = vec_from_json(load_json_file(o.inputs[0]));
  if (o.level > 0) {
    const auto w = format_word(eta_word_at_level(vec, o.level));
    return ok(Json{{"level", o.level}, {"word", w}}, w);
  }
  const auto depth =
      o.depth > 0 ? o.depth
                  : static_cast<std::uint32_t>(std::max<std::uint64_t>(1, eta_max_index(vec)));
  const auto seq = eta_element(vec, depth);
  return ok(sequence_to_json(seq), format_word(seq.level(depth)));
}

EquivRelation relation_arg(const Options &o) {
  need(!o.relation.empty(), "--relation is required");
  return relation_from_json(load_json_file(o.relation));
}

CommandResult cmd_fe_normal(const Options &o) {
  need(o.inputs.size() == 1, "fe normal takes one word");
  const auto E = relation_arg(o);
  const auto w = format_xword(e_normal_form(E, xword_arg(o.inputs[0])).letters());
  return ok(Json{{"word", w}}, w);
}

CommandResult cmd_fe_eq(const Options &o) {
  need(o.inputs.size() == 2, "fe eq takes two words");
  const auto E = relation_arg(o);
  const bool eq = fe_equivalent(E, xword_arg(o.inputs[0]), xword_arg(o.inputs[1]));
  return ok(Json{{"equivalent", eq}}, eq ? "true" : "false");
}

CommandResult cmd_fe_quotient(const Options &o) {
  need(o.inputs.size() == 1, "fe quotient takes one word");
  const auto E = relation_arg(o);
  const auto w = format_xword(quotient_word(E, xword_arg(o.inputs[0])));
  return ok(Json{{"word", w}}, w);
}

constexpr std::uint32_t default_render_depth = 6;

TreeDesc tree_arg(const Options &o) {
  need(!o.tree.empty(), "--tree is required");
  return tree_from_json(load_json_file(o.tree));
}

CommandResult cmd_becker_gadget(const Options &o) {
  const auto t = tree_arg(o);
  const auto g = build_gadget(t, o.depth > 0 ? o.depth : default_render_depth);
  const auto c = gadget_components(t);
  Json marked = Json::object();
  for (const auto &[label, p] : g.marked_points)
    marked[label] = Json::array({rational_to_string(p.x), rational_to_string(p.y)});
  Json payload{{"components", c.components},
               {"assignment", c.assignment},
               {"segments", g.segments.size()},
               {"polylines", g.polylines.size()},
               {"marked_points", marked}};
  return ok(std::move(payload),
            std::to_string(c.components) + " path component(s)");
}

CommandResult cmd_becker_svg(const Options &o) {
  need(!o.svg.empty(), "--svg is required");
  const auto g = build_gadget(tree_arg(o), o.depth > 0 ? o.depth : default_render_depth);
  const auto doc = export_svg(g);
  std::ofstream out(o.svg, std::ios::binary);
  if (!out || !(out << doc))
    throw Error("IOError", "cannot write " + o.svg);
  const auto paths = g.segments.size() + g.polylines.size();
  return ok(Json{{"svg", o.svg}, {"paths", paths}, {"bytes", doc.size()}},
            "wrote " + o.svg);
}

CommandResult cmd_becker_assembly(const Options &o) {
  const auto a = build_assembly(relation_arg(o), o.depth);
  return ok(assembly_to_json(a), std::to_string(a.points.size()) + " fibers over " +
                                     std::to_string(a.cprime_points.size()) +
                                     " points");
}

CommandResult cmd_becker_connect(const Options &o) {
  need(o.inputs.size() == 2, "becker connect takes two C' labels");
  const auto a = build_assembly(relation_arg(o), o.depth);
  const bool c = assembly_connected(a, o.inputs[0], o.inputs[1]);
  return ok(Json{{"connected", c}}, c ? "true" : "false");
}

Json error_payload(const Error &e) {
  Json j{{"error", e.kind()}, {"message", e.what()}};
  if (const auto *s = dynamic_cast<const SyntaxError *>(&e)) {
    j["offset"] = s->offset();
    j["expected"] = s->expected();
  } else if (const auto *i = dynamic_cast<const IndexedError *>(&e)) {
    j["index"] = i->index();
  }
  return j;
}

} // namespace

CommandResult run_command(const std::vector<std::string> &argv) {
  Options o;
  Handler handler;

  CLI::App app{"Word calculus for wild fundamental groups", "wildpi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print the JSON payload instead of the summary");

  auto verb = [&](CLI::App *parent, const std::string &name,
                  const std::string &help, CommandResult (*fn)(const Options &)) {
    auto *sub = parent->add_subcommand(name, help);
    sub->callback([&handler, &o, fn] { handler = [&o, fn] { return fn(o); }; });
    return sub;
  };
  auto group = [&](const std::string &name, const std::string &help) {
    auto *sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };
  auto inputs = [&](CLI::App *sub, const std::string &what) {
    sub->add_option("inputs", o.inputs, what);
  };
  auto depth = [&](CLI::App *sub, const std::string &what) {
    return sub->add_option("--depth", o.depth, what);
  };

  inputs(verb(&app, "reduce", "Freely reduce a word", cmd_reduce), "word");
  {
    auto *sub = verb(&app, "project", "Delete letters above a level and reduce", cmd_project);
    sub->add_option("--level", o.level, "Target level n")->required();
    inputs(sub, "word");
  }

  auto *earring = group("earring", "Coherent word sequences");
  {
    auto *sub = verb(earring, "check", "Stabilization report", cmd_earring_check);
    sub->add_option("--word", o.word, "Embed this word instead of reading a file");
    depth(sub, "Depth for --word");
    inputs(sub, "sequence file");
    auto *tower = verb(earring, "tower", "Commutator tower sequence", cmd_earring_tower);
    depth(tower, "Depth D")->required();
  }

  auto *ha = group("ha", "Harmonic archipelago kernel test");
  {
    auto *kernel = verb(ha, "kernel", "Scan for a kernel witness", cmd_ha_kernel);
    kernel->add_option("--word", o.word, "Embed this word instead of reading a file");
    depth(kernel, "Depth for --word");
    inputs(kernel, "sequence file");
    auto *equiv = verb(ha, "equiv", "Kernel test on a^-1 b", cmd_ha_equiv);
    depth(equiv, "Embed the inputs as words at this depth");
    inputs(equiv, "two words, or two sequence files");
    auto *eta = verb(ha, "eta", "E_1 gadget element for a prefix vector", cmd_ha_eta);
    depth(eta, "Sequence depth (default: largest index used)");
    eta->add_option("--level", o.level, "Print only this level");
    inputs(eta, "prefix-vector file");
  }

  auto *fe = group("fe", "Free group over an equivalence relation");
  for (auto [name, help, fn] :
       {std::tuple{"normal", "Normal form", cmd_fe_normal},
        std::tuple{"eq", "Decide equality", cmd_fe_eq},
        std::tuple{"quotient", "Image in the free group on classes", cmd_fe_quotient}}) {
    auto *sub = verb(fe, name, help, fn);
    sub->add_option("--relation", o.relation, "Relation JSON file")->required();
    inputs(sub, "word(s)");
  }

  auto *becker = group("becker", "Gadgets and fiber assemblies");
  {
    auto *gadget = verb(becker, "gadget", "Gadget components and geometry summary",
                        cmd_becker_gadget);
    gadget->add_option("--tree", o.tree, "Tree JSON file")->required();
    depth(gadget, "Render depth (default 6)");
    auto *svg = verb(becker, "svg", "Write the gadget as SVG", cmd_becker_svg);
    svg->add_option("--tree", o.tree, "Tree JSON file")->required();
    svg->add_option("--svg", o.svg, "Output SVG file")->required();
    depth(svg, "Render depth (default 6)");
    auto *assembly = verb(becker, "assembly", "Fiber assembly as JSON", cmd_becker_assembly);
    assembly->add_option("--relation", o.relation, "Relation JSON file")->required();
    depth(assembly, "Fiber depth d")->required();
    auto *connect = verb(becker, "connect", "Path-connectedness of two C' points",
                         cmd_becker_connect);
    connect->add_option("--relation", o.relation, "Relation JSON file")->required();
    depth(connect, "Fiber depth d")->required();
    inputs(connect, "two C' labels");
  }

  CommandResult result;
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
    result = handler();
  } catch (const CLI::CallForHelp &) {
    const auto *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().back();
    while (!sub->get_subcommands().empty())
      sub = sub->get_subcommands().back();
    result = ok(Json{{"help", sub->help()}}, sub->help());
  } catch (const CLI::ParseError &e) {
    result = {2, Json{{"error", "UsageError"}, {"message", e.what()}},
              std::string("error: UsageError: ") + e.what()};
  } catch (const Error &e) {
    result = {1, error_payload(e), "error: " + e.kind() + ": " + e.what()};
  }
  result.json = o.json;
  return result;
}

} // namespace wildpi::cli
