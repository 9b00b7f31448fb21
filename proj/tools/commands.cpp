#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tgp/burning.hpp"
#include "tgp/cliquewidth.hpp"
#include "tgp/modular.hpp"
#include "tgp/oracles.hpp"
#include "tgp/partition.hpp"
#include "tgp/reachdelete.hpp"
#include "tgp/starexp.hpp"

namespace tgp::cli {

using json = nlohmann::ordered_json;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

json times_json(const TimeSet& ts) { return json(ts); }

json target_json(Time t) { return t == kInf ? json("inf") : json(t); }

std::vector<std::string> names_of(const TemporalGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

TemporalGraph graph_of(const Input& in) { return parse_temporal_graph(in.text); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw OracleMismatch(what);
}

json tree_json(const TemporalGraph& g, const TMDNode& n) {
  json j;
  j["kind"] = to_string(n.kind);
  j["vertices"] = names_of(g, n.vertices);
  if (n.kind == TMDKind::Series) j["series_times"] = n.series_times;
  if (!n.children.empty()) {
    json q = json::array();
    for (const auto& [p, ts] : n.quotient.edges()) q.push_back({{"a", p.first}, {"b", p.second}, {"times", ts}});
    j["quotient_edges"] = q;
    json kids = json::array();
    for (const auto& c : n.children) kids.push_back(tree_json(g, c));
    j["children"] = kids;
  }
  return j;
}

}  // namespace

Input read_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  Input in{path, ss.str(), {}};
  in.sha256 = sha256_hex(in.text);
  return in;
}

json input_json(const std::vector<Input>& inputs) {
  json arr = json::array();
  for (const auto& in : inputs) arr.push_back({{"path", in.path}, {"sha256", in.sha256}});
  return arr;
}

json cmd_tnd(const Input& in, const Options& o) {
  auto g = graph_of(in);
  auto p = temporal_neighbourhood_partition(g);
  json classes = json::array(), internal = json::array(), cross = json::array();
  for (int a = 0; a < p.k(); ++a) {
    classes.push_back(names_of(g, p.classes[a]));
    internal.push_back(times_json(p.internal_times[a]));
  }
  for (const auto& [ab, ts] : p.cross_times) cross.push_back({{"a", ab.first}, {"b", ab.second}, {"times", ts}});
  if (o.oracle_check) {
    // Pairwise definition: same class iff identical times to every third vertex.
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        bool twins = true;
        for (int w = 0; w < g.n(); ++w)
          if (w != u && w != v && g.times(u, w) != g.times(v, w)) twins = false;
        expect(twins == (p.class_of[u] == p.class_of[v]), "partition disagrees with the pairwise definition");
      }
  }
  json r;
  r["k"] = p.k();
  r["classes"] = classes;
  r["internal_times"] = internal;
  r["cross_times"] = cross;
  r["quotient"] = serialize_temporal_graph(quotient_graph(g, p));
  return r;
}

json cmd_tmd(const Input& in, const Options& o) {
  auto g = graph_of(in);
  auto t = decomposition_tree(g);
  auto mods = maximal_temporal_modules(g);
  if (o.oracle_check) {
    expect(mods == oracle::maximal_strong_modules(g), "maximal modules differ from the exhaustive oracle");
    expect(evaluate_tree(t) == g, "decomposition tree does not re-evaluate to the input");
  }
  json m = json::array();
  for (const auto& x : mods) m.push_back(names_of(g, x));
  json r;
  r["width"] = temporal_modular_width(t);
  r["maximal_modules"] = m;
  r["tree"] = tree_json(g, t.root);
  return r;
}

json cmd_tcw_eval(const Input& expr, const Options&) {
  auto e = parse_expression(expr.text);
  auto lg = evaluate_expression(e);
  json labels = json::object();
  for (const auto& [n, l] : lg.label) labels[n] = l;
  json r;
  r["temporal"] = e.temporal();
  r["width"] = e.width();
  r["labels"] = labels;
  r["graph"] = serialize_temporal_graph(lg.graph);
  return r;
}

json cmd_tcw_verify(const Input& expr, const Input& graph, const Options&) {
  auto e = parse_expression(expr.text);
  auto g = graph_of(graph);
  bool ok = e.temporal() ? verify_expression(e, g) : verify_static_expression(e, underlying_graph(g));
  json r;
  r["temporal"] = e.temporal();
  r["width"] = e.width();
  r["valid"] = ok;
  return r;
}

json cmd_tcw_star(const Input& in, const Options& o) {
  auto g = graph_of(in);
  auto c = find_star_centre(g);
  if (!c) throw InputError("input is not a star");
  auto e = star_expression(g);
  if (o.oracle_check) expect(verify_expression(e, g), "star expression does not evaluate to the input");
  json r;
  r["centre"] = g.name(*c);
  r["width"] = e.width();
  r["expression"] = format_expression(e);
  return r;
}

json cmd_tcw_compile(const Input& in, const Options& o) {
  auto g = graph_of(in);
  auto t = decomposition_tree(g);
  auto e = tmw_to_tcw_expression(t);
  if (o.oracle_check) {
    expect(verify_expression(e, g), "compiled expression does not evaluate to the input");
    expect(e.width() <= std::max(2, temporal_modular_width(t)), "compiled expression exceeds the label bound");
  }
  json r;
  r["tmw"] = temporal_modular_width(t);
  r["width"] = e.width();
  r["expression"] = format_expression(e);
  return r;
}

json cmd_assoc(const Input& in, int delta, const Options& o) {
  auto g = graph_of(in);
  auto a = association_graph(g, delta);
  if (o.oracle_check) expect(a == oracle::association_graph(g, delta), "association graph differs from the oracle");
  json edges = json::array();
  for (auto [u, v] : a.edges) edges.push_back({g.name(u), g.name(v)});
  json r;
  r["num_edges"] = a.edges.size();
  r["edges"] = edges;
  return r;
}

json cmd_dclique(const Input& in, int delta, int h, const Input* expr, const Options& o) {
  auto g = graph_of(in);
  std::optional<CWExpression> e;
  if (expr) e = parse_expression(expr->text);
  auto res = solve_temporal_delta_clique(g, delta, h, e);
  if (o.oracle_check)
    expect(res.clique_size == oracle::max_clique(oracle::association_graph(g, delta)),
           "clique size differs from the exhaustive oracle");
  json r;
  r["yes"] = res.yes;
  r["clique_size"] = res.clique_size;
  r["witness"] = res.witness;
  r["method"] = res.method;
  return r;
}

json cmd_starexp(const Input& in, int tau, const Options& o) {
  auto g = graph_of(in);
  auto s = star_from_graph(g);
  auto res = solve_starexp(s, tau, {o.threads, 10});
  if (o.oracle_check) {
    auto serial = solve_starexp_serial(s, tau);
    expect(serial.yes == res.yes && serial.order == res.order, "parallel and serial searches disagree");
    expect(oracle::star_explorable(s) == res.yes, "verdict differs from exhaustive walk enumeration");
  }
  auto sg = star_to_graph(s);
  json order = json::array(), walk = json::array();
  for (int l : res.order) order.push_back(s.leaves[l]);
  for (const auto& st : res.walk) walk.push_back({{"from", sg.name(st.from)}, {"to", sg.name(st.to)}, {"t", st.t}});
  json r;
  r["yes"] = res.yes;
  r["reason"] = res.reason;
  r["centre"] = s.centre;
  r["order"] = order;
  r["walk"] = walk;
  return r;
}

json cmd_burn_simulate(const Input& in, const std::vector<std::string>& strategy, const Options&) {
  auto g = graph_of(in);
  BurningStrategy s;
  for (const auto& name : strategy) s.push_back(g.index(name));
  auto tr = simulate(g, s);
  json steps = json::array();
  for (const auto& row : tr.burning) {
    std::vector<std::string> on;
    for (int v = 0; v < g.n(); ++v)
      if (row[v]) on.push_back(g.name(v));
    steps.push_back(on);
  }
  json r;
  r["length"] = s.size();
  r["success"] = is_successful(g, s);
  r["burning"] = steps;
  return r;
}

namespace {

json class_list(const TemporalGraph& g, const NeighbourhoodPartition& p, const std::vector<int>& ids) {
  json arr = json::array();
  for (int c : ids) arr.push_back(names_of(g, p.classes[c]));
  return arr;
}

}  // namespace

json cmd_burn_solve(const Input& in, int h, const Options& o) {
  auto g = graph_of(in);
  auto p = temporal_neighbourhood_partition(g);
  auto res = solve_tnd_burning(g, h, p, {o.threads, true});
  if (o.oracle_check) {
    int bn = brute_force_burning_number(g, 12);
    expect(res.yes == (bn <= h), "verdict differs from the brute-force burning number");
    if (res.yes) expect(is_successful(g, res.witness) && static_cast<int>(res.witness.size()) <= h,
                        "witness strategy does not burn the graph within h");
  }
  json r;
  r["yes"] = res.yes;
  r["k"] = p.k();
  r["witness"] = names_of(g, res.witness);
  r["order"] = class_list(g, p, res.order);
  r["b_set"] = class_list(g, p, res.b_set);
  r["canonical"] = res.canonical;
  return r;
}

json cmd_burn_number(const Input& in, const Options& o) {
  auto g = graph_of(in);
  if (g.n() == 0) throw InputError("graph has no vertices");
  auto p = temporal_neighbourhood_partition(g);
  int number = -1;
  BurningResult best;
  for (int h = 1; h <= g.n(); ++h) {
    best = solve_tnd_burning(g, h, p, {o.threads, true});
    if (best.yes) {
      number = h;
      break;
    }
  }
  if (o.oracle_check) expect(number == brute_force_burning_number(g, 12), "burning number differs from brute force");
  json r;
  r["burning_number"] = number;
  r["witness"] = names_of(g, best.witness);
  return r;
}

json cmd_burn_gen_sat(const Input& cnf, int leaf_multiplicity, const Options& o) {
  auto f = parse_dimacs(cnf.text);
  validate_formula(f);
  auto inst = sat_to_burning(f, leaf_multiplicity);
  json r;
  r["variables"] = f.n;
  r["clauses"] = f.clauses.size();
  r["h"] = inst.h;
  r["vertices"] = inst.graph.n();
  r["time_edges"] = inst.graph.num_time_edges();
  r["components"] = connected_components(inst.graph).size();
  if (o.oracle_check || f.n <= 24) r["satisfiable"] = brute_force_satisfiable(f);
  r["graph"] = serialize_temporal_graph(inst.graph);
  return r;
}

json cmd_reachdelete(const Input& in, const std::string& source, int r_budget, bool exclude_source,
                     const Options& o) {
  auto g = graph_of(in);
  int s = g.index(source);
  ReachDeleteOptions opt;
  opt.exclude_source = exclude_source;
  opt.threads = o.threads;
  if (o.oracle_check && g.num_time_edges() > 14)
    throw SizeBoundError("oracle check needs at most 14 time-edges; graph has " +
                         std::to_string(g.num_time_edges()));
  auto res = solve_reachdelete(g, s, r_budget, opt);
  if (o.oracle_check) {
    expect(res.min_deletions == brute_force_reachdelete(g, s, r_budget, exclude_source),
           "deletion count differs from brute force");
    auto reached = reach_set(without_time_edges(g, res.witness), s).size() - (exclude_source ? 1 : 0);
    expect(static_cast<int>(reached) <= r_budget, "witness leaves too many vertices reachable");
  }
  auto p = temporal_neighbourhood_partition(g);
  json witness = json::array();
  for (const auto& e : res.witness) witness.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"t", e.t}});
  json phi = json::array();
  for (int c = 0; c < p.k(); ++c) {
    json targets = json::array();
    for (Time t : res.phi[c]) targets.push_back(target_json(t));
    phi.push_back({{"class", names_of(g, p.classes[c])}, {"targets", targets}});
  }
  json sizes = json::array();
  for (const auto& [node, x] : res.sizes)
    sizes.push_back({{"class", names_of(g, p.classes[node.cls])}, {"target", target_json(node.target)}, {"size", x}});
  json r;
  r["min_deletions"] = res.min_deletions;
  r["witness"] = witness;
  r["phi"] = phi;
  r["per_subclass_sizes"] = sizes;
  r["assignments_checked"] = res.assignments_checked;
  r["assignments_feasible"] = res.assignments_feasible;
  return r;
}

}  // namespace tgp::cli
