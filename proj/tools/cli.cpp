#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngpoly/analysis.hpp"
#include "ngpoly/combinatorics.hpp"
#include "ngpoly/io.hpp"

namespace ngpoly::cli {

namespace {

using json = nlohmann::json;

struct Settings {
  std::optional<long> height_bound;
  std::optional<long> idp_bound;
  std::optional<long> level_bound;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_dim = 5;
  bool timings = false;
  std::vector<std::string> files;
};

// Collects stage timings and whether any verdict stayed open.
struct Context {
  const Settings& settings;
  bool inconclusive = false;
  json timings = json::object();

  template <class F>
  auto timed(const std::string& stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    timings[stage] = std::round(ms.count() * 1000) / 1000;
    return result;
  }
};

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational(const Rational& q) { return q.get_str(); }

json point(const LatticePoint& p) { return p; }

json points(std::vector<LatticePoint> ps) {
  std::sort(ps.begin(), ps.end());
  return ps;
}

json rational_points(std::vector<PointQ> ps) {
  std::sort(ps.begin(), ps.end());
  json out = json::array();
  for (const auto& p : ps) {
    json row = json::array();
    for (const auto& x : p) row.push_back(rational(x));
    out.push_back(row);
  }
  return out;
}

json int_rows(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer(x));
    out.push_back(r);
  }
  return out;
}

json facets(const Polytope& p) {
  json out = json::array();
  for (const auto& f : p.facets()) {
    json normal = json::array();
    for (const auto& x : f.normal) normal.push_back(integer(x));
    out.push_back({{"normal", normal}, {"height", rational(f.height)}});
  }
  return out;
}

json polytope(const Polytope& p) {
  if (p.is_empty()) return {{"empty", true}};
  json out{{"empty", false}, {"dim", p.dim()}, {"facets", facets(p)}};
  if (p.is_lattice())
    out["vertices"] = points(p.lattice_vertices());
  else
    out["vertices"] = rational_points(p.vertices());
  return out;
}

json idp_json(const IdpResult& r) {
  json out{{"holds", r.holds}, {"bound", r.bound}};
  if (r.failing_height) out["failing_height"] = *r.failing_height;
  if (r.counterexample) out["counterexample"] = point(*r.counterexample);
  return out;
}

json gorenstein_json(const Polytope& p, const GorensteinResult& r) {
  json out{{"holds", r.holds}, {"codegree", r.codegree}};
  if (r.center) {
    out["center"] = point(*r.center);
    // aP - center is the reflexive certificate
    PointQ shift;
    for (auto x : *r.center) shift.push_back(-x);
    out["reflexive"] = polytope(translate(dilate(p, r.codegree), shift));
  }
  return out;
}

json decomposition_json(const LatticeDecomposition& d) {
  json out{{"holds", d.holds}};
  if (d.counterexample) out["counterexample"] = point(*d.counterexample);
  json w = json::array();
  for (const auto& x : d.witnesses)
    w.push_back({{"point", point(x.point)},
                 {"floor_part", point(x.floor_part)},
                 {"remainder_part", point(x.remainder_part)}});
  out["witnesses"] = w;
  return out;
}

json verdict_json(Context& ctx, const Polytope& p, const NGVerdict& v) {
  json out{{"status", to_string(v.status)},
           {"nearly_gorenstein", v.is_ng()},
           {"codegree", v.codegree},
           {"checked_height", v.checked_height},
           {"idp_assumed", v.idp_assumed},
           {"gorenstein", gorenstein_json(p, v.gorenstein)}};
  if (v.decomposition) out["decomposition"] = decomposition_json(*v.decomposition);
  if (v.idp) out["idp"] = idp_json(*v.idp);
  if (v.violation) out["violation"] = {{"height", v.violation->height}, {"point", point(v.violation->point)}};
  if (v.status == NGStatus::unknown_bounded) ctx.inconclusive = true;
  return out;
}

NGOptions ng_options(const Settings& s) {
  NGOptions o;
  o.height_bound = s.height_bound;
  o.idp_bound = s.idp_bound;
  return o;
}

json input_json(const std::string& path, const PolytopeInput& in) {
  json out{{"file", path}, {"ambient_dim", in.ambient_dim}, {"points", rational_points(in.points)}};
  if (in.name) out["name"] = *in.name;
  if (in.basis) {
    json rows = json::array();
    for (const auto& r : *in.basis) {
      json row = json::array();
      for (const auto& x : r) row.push_back(rational(x));
      rows.push_back(row);
    }
    out["lattice"] = {{"basis", rows},
                      {"determinant", rational(LatticeBasis(*in.basis).determinant())},
                      {"coordinates", points(in.lattice_points)}};
  }
  const auto& m = in.projection.map;
  out["projection"] = {{"dim", m.dim},
                       {"identity", m.is_identity()},
                       {"origin", point(m.origin)},
                       {"basis", int_rows(m.basis)}};
  return out;
}

json level_json(Context& ctx, const LevelResult& r) {
  json counts = json::array();
  for (auto [k, c] : r.generator_counts) counts.push_back({{"degree", k}, {"generators", c}});
  json out{{"status", to_string(r.status)},
           {"codegree", r.codegree},
           {"horizon", r.horizon},
           {"generator_counts", counts}};
  if (r.extra_generator) out["extra_generator"] = {{"degree", *r.extra_degree}, {"point", point(*r.extra_generator)}};
  if (r.status == LevelStatus::unknown) ctx.inconclusive = true;
  return out;
}

json zero_one_json(Context& ctx, const ZeroOneVerdict& v) {
  json factors = json::array();
  for (const auto& f : v.decomposition.factors)
    factors.push_back({{"coordinates", f.coordinates}, {"vertices", points(f.vertices)}, {"trivial", f.trivial()}});
  json reports = json::array();
  for (const auto& f : v.factors)
    reports.push_back({{"coordinates", f.coordinates},
                       {"dim", f.dim},
                       {"gorenstein", f.gorenstein.holds},
                       {"codegree", f.gorenstein.codegree}});
  json out{{"factors", factors}, {"factor_reports", reports}, {"formula", v.formula}, {"agree", v.agree()}};
  if (v.engine) {
    out["engine"] = {{"status", to_string(v.engine->status)}, {"nearly_gorenstein", v.engine->is_ng()}};
    if (v.engine->status == NGStatus::unknown_bounded) ctx.inconclusive = true;
  } else {
    out["engine"] = nullptr;
  }
  return out;
}

std::vector<LatticePoint> hull_vertices(const std::vector<LatticePoint>& pts, std::size_t d) {
  return Polytope::from_points(pts, d).lattice_vertices();
}

// Commands. Each returns the body of the report.

json cmd_codegree(Context& ctx, const PolytopeInput& in) {
  long a = ctx.timed("codegree", [&] { return codegree(in.polytope); });
  auto interior = int_slice(in.polytope, a);
  return {{"codegree", a}, {"interior_point", point(interior[0])}};
}

json cmd_floor(Context& ctx, const PolytopeInput& in) {
  long a = codegree(in.polytope);
  auto f = ctx.timed("floor", [&] { return floor_polytope(in.polytope); });
  return {{"codegree", a}, {"floor", polytope(f)}};
}

json cmd_remainder(Context& ctx, const PolytopeInput& in) {
  long a = codegree(in.polytope);
  auto r = ctx.timed("remainder", [&] { return remainder_polytope(in.polytope); });
  return {{"codegree", a}, {"remainder", polytope(r)}};
}

json cmd_is_idp(Context& ctx, const PolytopeInput& in) {
  auto r = ctx.timed("idp", [&] { return is_idp(in.polytope, ctx.settings.idp_bound); });
  return {{"idp", idp_json(r)}};
}

json cmd_is_gorenstein(Context& ctx, const PolytopeInput& in) {
  auto r = ctx.timed("gorenstein", [&] { return is_gorenstein(in.polytope); });
  return {{"gorenstein", gorenstein_json(in.polytope, r)}};
}

json cmd_is_ng(Context& ctx, const PolytopeInput& in) {
  auto v = ctx.timed("nearly_gorenstein",
                     [&] { return is_nearly_gorenstein(in.polytope, ng_options(ctx.settings)); });
  return {{"nearly_gorenstein", verdict_json(ctx, in.polytope, v)}};
}

json cmd_analyze(Context& ctx, const PolytopeInput& in) {
  const Polytope& p = in.polytope;
  json out;
  out["polytope"] = polytope(p);
  long a = ctx.timed("codegree", [&] { return codegree(p); });
  out["codegree"] = a;
  out["floor"] = polytope(ctx.timed("floor", [&] { return floor_polytope(p); }));
  out["remainder"] = polytope(ctx.timed("remainder", [&] { return remainder_polytope(p); }));
  out["minkowski"] = ctx.timed("minkowski", [&] { return ng_necessary_minkowski(p); });
  auto v = ctx.timed("nearly_gorenstein", [&] { return is_nearly_gorenstein(p, ng_options(ctx.settings)); });
  out["nearly_gorenstein"] = verdict_json(ctx, p, v);
  auto idp = v.idp ? *v.idp : ctx.timed("idp", [&] { return is_idp(p, ctx.settings.idp_bound); });
  out["idp"] = idp_json(idp);
  out["gorenstein"] = gorenstein_json(p, v.gorenstein);
  return out;
}

json cmd_theorem_checks(Context& ctx, const PolytopeInput& in) {
  const Polytope& p = in.polytope;
  json checks;
  bool minkowski = ng_necessary_minkowski(p);
  checks["minkowski"] = minkowski;
  if (minkowski) {
    auto ident = ctx.timed("facet_identity", [&] { return floor_rem_facet_identity(p); });
    checks["facet_identity"] = {{"floor_matches", ident.floor_matches},
                                {"remainder_matches", ident.remainder_matches},
                                {"holds", ident.holds()}};
    if (ident.remainder_reflexive) checks["facet_identity"]["remainder_reflexive"] = *ident.remainder_reflexive;
    checks["aP_decomposition"] = ctx.timed("aP_decomposition", [&] { return aP_decomposition_check(p); });
    checks["dilate_identities"] = {{"k_max", 4},
                                   {"holds", ctx.timed("dilate_identities", [&] { return dilate_identities_check(p, 4); })}};
    auto bound = dilation_threshold(p);
    checks["dilation_threshold"] = {{"edge_length", integer(bound.edge_length)},
                                    {"codegree", bound.codegree},
                                    {"threshold", integer(bound.threshold)}};
    auto rem = remainder_of_codegree_dilate(p);
    checks["remainder_of_codegree_dilate"] = {{"polytope", polytope(rem)}, {"reflexive", is_reflexive(rem)}};
  } else {
    checks["skipped"] = "the Minkowski condition fails, so the identities do not apply";
  }
  auto v = ctx.timed("nearly_gorenstein", [&] { return is_nearly_gorenstein(p, ng_options(ctx.settings)); });
  checks["nearly_gorenstein"] = {{"status", to_string(v.status)}, {"checked_height", v.checked_height}};
  if (v.status == NGStatus::unknown_bounded) ctx.inconclusive = true;
  if (v.is_ng())
    checks["normals_on_reflexive_boundary"] =
        ctx.timed("normal_fan", [&] { return normals_on_reflexive_boundary(p, v); });
  auto idp = v.idp ? *v.idp : is_idp(p, ctx.settings.idp_bound);
  checks["idp"] = idp.holds;
  if (idp.holds)
    checks["level"] = level_json(ctx, ctx.timed("level", [&] { return is_level(p, ctx.settings.level_bound); }));
  return {{"checks", checks}};
}

json cmd_decompose_01(Context& ctx, const PolytopeInput& in) {
  auto vertices = hull_vertices(in.lattice_points, in.ambient_dim);
  auto v = ctx.timed("zero_one", [&] { return ng_01_check(vertices); });
  json out{{"zero_one", zero_one_json(ctx, v)}};
  out["level"] = level_json(ctx, ctx.timed("level", [&] { return is_level(in.polytope, ctx.settings.level_bound); }));
  return out;
}

json cmd_edge_polytope(Context& ctx, const GraphInput& in) {
  auto g = in.simple_graph();
  auto occ = odd_cycle_condition(g);
  json out;
  out["odd_cycle_condition"] = {{"holds", occ.holds}, {"odd_cycles", occ.odd_cycle_count}};
  if (occ.violation)
    out["odd_cycle_condition"]["violation"] = {occ.violation->first, occ.violation->second};
  auto v = ctx.timed("edge_polytope", [&] { return ng_edge_polytope(g); });
  auto p = edge_polytope(g);
  out["dim"] = p.dim();
  out["vertices"] = points(p.original.lattice_vertices());
  out["gorenstein"] = v.gorenstein;
  out["complete_bipartite_n_n_plus_1"] = v.is_k_n_n_plus_1;
  out["formula"] = v.formula;
  out["engine"] = verdict_json(ctx, p.projected, v.engine);
  out["agree"] = v.agree();
  out["nearly_gorenstein"] = v.engine.is_ng();
  return out;
}

json cmd_matroid(Context& ctx, const GraphInput& in) {
  auto v = ctx.timed("matroid", [&] {
    return ng_graphic_matroid(in.graph, 8);
  });
  json blocks = json::array();
  std::vector<long> codegrees;
  for (const auto& b : v.blocks) {
    blocks.push_back({{"vertices", b.block.vertices},
                      {"edges", b.block.edge_ids},
                      {"dim", b.dim},
                      {"gorenstein", b.gorenstein.holds},
                      {"codegree", b.gorenstein.codegree}});
    codegrees.push_back(b.gorenstein.codegree);
  }
  std::sort(codegrees.begin(), codegrees.end());
  return {{"blocks", blocks},
          {"block_codegrees", codegrees},
          {"formula", v.formula},
          {"nearly_gorenstein", v.formula},
          {"zero_one", zero_one_json(ctx, v.zero_one)},
          {"agree", v.agree()}};
}

json cmd_construct(Context& ctx, const PolytopeInput& q, const std::vector<Facet>& heights) {
  auto r = ctx.timed("construct", [&] { return construct_candidate(q.polytope, heights, ng_options(ctx.settings)); });
  return {{"base", polytope(r.base)},
          {"scale", r.scale},
          {"dilation", r.dilation},
          {"search_cap", r.search_cap},
          {"polytope", polytope(r.polytope)},
          {"nearly_gorenstein", verdict_json(ctx, r.polytope, r.verdict)}};
}

json cmd_order_polytope(Context& ctx, const Poset& poset) {
  auto formula = hibi_ng_formula(poset);
  ZeroOneOptions options;
  options.assume_idp = true;  // order polytopes are compressed
  auto v = ctx.timed("zero_one", [&] { return ng_01_check(order_polytope(poset).lattice_vertices(), options); });
  json ranks = json::array();
  for (const auto& r : formula.invariants) ranks.push_back(r ? json(*r) : json(nullptr));
  return {{"component_ranks", ranks},
          {"formula", formula.nearly_gorenstein},
          {"zero_one", zero_one_json(ctx, v)},
          {"agree", v.formula == formula.nearly_gorenstein && v.agree()}};
}

json cmd_stable_set(Context& ctx, const GraphInput& in) {
  auto g = in.simple_graph();
  auto formula = stab_ng_formula(g);
  ZeroOneOptions options;
  options.assume_idp = true;  // perfection asserted by the caller
  auto v = ctx.timed("zero_one", [&] { return ng_01_check(stable_set_polytope(g).lattice_vertices(), options); });
  json cliques = json::array();
  for (const auto& c : formula.invariants) cliques.push_back(c ? json(*c) : json(nullptr));
  return {{"perfect", "asserted by caller"},
          {"component_clique_sizes", cliques},
          {"formula", formula.nearly_gorenstein},
          {"zero_one", zero_one_json(ctx, v)},
          {"agree", v.formula == formula.nearly_gorenstein && v.agree()}};
}

json cmd_differential_01(Context& ctx) {
  const auto& s = ctx.settings;
  auto corpus = ctx.timed("corpus", [&] { return random_idp_01_polytopes(s.seed, s.count, s.max_dim); });
  std::size_t agree = 0, ng = 0, level = 0;
  json disagreements = json::array(), not_level = json::array();
  ctx.timed("checks", [&] {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      ZeroOneOptions options;
      options.assume_idp = true;  // the generator keeps IDP instances only
      auto v = ng_01_check(corpus[i], options);
      if (v.agree())
        ++agree;
      else
        disagreements.push_back(i);
      if (!v.formula) continue;
      ++ng;
      auto l = is_level(project_to_full_dimension(corpus[i]).projected, s.level_bound);
      if (l.status == LevelStatus::level)
        ++level;
      else
        not_level.push_back({{"index", i}, {"status", to_string(l.status)}});
    }
    return 0;
  });
  if (!not_level.empty()) ctx.inconclusive = true;
  return {{"seed", s.seed},
          {"count", corpus.size()},
          {"max_dim", s.max_dim},
          {"agree", agree},
          {"disagreements", disagreements},
          {"nearly_gorenstein", ng},
          {"level", level},
          {"ng_not_level", not_level}};
}

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  auto scalar_list = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
  };
  auto inline_value = [&](const json& v) -> std::optional<std::string> {
    if (!v.is_structured()) return v.is_string() ? v.get<std::string>() : v.dump();
    if (v.is_array() && scalar_list(v)) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      return s + ")";
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [&](const json& x) { return x.is_array() && scalar_list(x); })) {
      std::string s;
      for (const auto& row : v) {
        s += s.empty() ? "" : " ";
        s += "(";
        for (std::size_t i = 0; i < row.size(); ++i)
          s += (i ? "," : "") + (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
        s += ")";
      }
      return s.empty() ? "none" : s;
    }
    return std::nullopt;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (auto v = inline_value(it.value())) {
      out << indent << it.key() << ": " << *v << "\n";
    } else if (it.value().is_object()) {
      out << indent << it.key() << ":\n";
      render_text(it.value(), out, indent + "  ");
    } else {
      out << indent << it.key() << ":\n";
      for (const auto& item : it.value()) {
        if (auto v = inline_value(item)) {
          out << indent << "  - " << *v << "\n";
        } else {
          out << indent << "  -\n";
          render_text(item, out, indent + "    ");
        }
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact analysis of lattice polytopes: codegree, IDP, Gorenstein and nearly Gorenstein tests.",
               "ngpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--height-bound", s.height_bound, "cone heights checked for non-IDP polytopes (default a + d)")
      ->check(CLI::PositiveNumber);
  app.add_option("--idp-bound", s.idp_bound, "largest dilation checked for IDP (default max(2, d - 1))")
      ->check(CLI::PositiveNumber);
  app.add_option("--level-bound", s.level_bound, "largest generator degree scanned for levelness (default d + 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", s.seed, "seed for randomized corpus commands");
  app.add_option("--count", s.count, "corpus size for differential-01")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", s.max_dim, "largest dimension for differential-01")->check(CLI::Range(2, 5));
  app.add_flag("--timings", s.timings, "add per-stage wall-clock timings (breaks byte-stability)");

  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> files;
  };
  const std::vector<Command> commands{
      {"analyze", "full report for a polytope", {"polytope"}},
      {"codegree", "least k with an interior lattice point in kP", {"polytope"}},
      {"floor", "hull of the interior lattice points of aP", {"polytope"}},
      {"remainder", "the remainder polytope {P}", {"polytope"}},
      {"is-idp", "integer decomposition property", {"polytope"}},
      {"is-gorenstein", "Gorenstein test with reflexive certificate", {"polytope"}},
      {"is-nearly-gorenstein", "nearly Gorenstein verdict", {"polytope"}},
      {"theorem-checks", "structural identities, dilation bound and levelness", {"polytope"}},
      {"decompose-01", "product decomposition and verdict for a (0,1)-polytope", {"polytope"}},
      {"edge-polytope", "edge polytope of a simple graph", {"graph"}},
      {"matroid", "base polytope of a graphic matroid", {"graph"}},
      {"construct", "nearly Gorenstein candidate over a reflexive polytope", {"polytope", "heights"}},
      {"order-polytope", "order polytope of a poset", {"poset"}},
      {"stable-set", "stable set polytope of a perfect graph", {"graph"}},
      {"differential-01", "random (0,1)-polytope corpus: product formula against the engine", {}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    if (!c.files.empty()) {
      std::string names;
      for (const auto* f : c.files) names += std::string(names.empty() ? "" : " ") + f;
      sub->add_option("files", s.files, names + " file" + (c.files.size() > 1 ? "s" : ""))
          ->expected(static_cast<int>(c.files.size()))
          ->required();
    }
    subs[c.name] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return conclusive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  std::string command;
  for (auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  Context ctx{s};
  json report;
  try {
    json body;
    if (command == "edge-polytope" || command == "matroid" || command == "stable-set") {
      auto g = read_graph_file(s.files.at(0));
      report["input"] = {{"file", s.files[0]},
                         {"vertices", g.graph.vertex_count()},
                         {"kind", g.simple ? "simple" : "multi"},
                         {"edges", g.graph.edges()}};
      if (command == "edge-polytope") body = cmd_edge_polytope(ctx, g);
      if (command == "matroid") body = cmd_matroid(ctx, g);
      if (command == "stable-set") body = cmd_stable_set(ctx, g);
    } else if (command == "order-polytope") {
      auto poset = read_poset_file(s.files.at(0));
      report["input"] = {{"file", s.files[0]}, {"size", poset.size()}, {"covers", poset.covers()}};
      body = cmd_order_polytope(ctx, poset);
    } else if (command == "differential-01") {
      body = cmd_differential_01(ctx);
    } else {
      auto in = ctx.timed("parse", [&] { return read_polytope_file(s.files.at(0)); });
      report["input"] = input_json(s.files[0], in);
      static const std::map<std::string, std::function<json(Context&, const PolytopeInput&)>> polytope_commands{
          {"analyze", cmd_analyze},
          {"codegree", cmd_codegree},
          {"floor", cmd_floor},
          {"remainder", cmd_remainder},
          {"is-idp", cmd_is_idp},
          {"is-gorenstein", cmd_is_gorenstein},
          {"is-nearly-gorenstein", cmd_is_ng},
          {"theorem-checks", cmd_theorem_checks},
          {"decompose-01", cmd_decompose_01},
      };
      if (command == "construct") {
        auto heights = read_heights_file(s.files.at(1));
        report["input"]["heights_file"] = s.files[1];
        body = cmd_construct(ctx, in, heights);
      } else {
        body = polytope_commands.at(command)(ctx, in);
      }
    }
    report.update(body);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return error;
  }
  report["schema"] = 1;
  report["command"] = command;
  report["conclusive"] = !ctx.inconclusive;
  if (s.timings) report["timings_ms"] = ctx.timings;

  if (s.format == "json")
    out << report.dump(2) << "\n";
  else
    render_text(report, out, "");
  return ctx.inconclusive ? inconclusive : conclusive;
}

}  // namespace ngpoly::cli
