#include <algorithm>

#include "expression_internal.hpp"
#include "tgp/cliquewidth.hpp"

namespace tgp {

StaticGraph association_graph(const TemporalGraph& g, int delta) {
  const Time lambda = g.lifetime();
  if (delta < 1 || delta > lambda)
    throw InputError("delta must satisfy 1 <= delta <= lifetime (" + std::to_string(lambda) + ")");
  StaticGraph s{g.names(), {}};
  for (const auto& [p, ts] : g.edges()) {
    bool every_window = true;
    for (Time i = 1; i + delta - 1 <= lambda && every_window; ++i) {
      auto it = std::lower_bound(ts.begin(), ts.end(), i);
      every_window = it != ts.end() && *it <= i + delta - 1;
    }
    if (every_window) s.edges.insert(p);
  }
  return s;
}

TransferResult transfer_expression(const CWExpression& e, int delta) {
  if (!e.temporal()) throw InputError("transfer expects a temporal expression");
  std::map<int, std::vector<std::pair<std::string, std::string>>> added;
  auto part = detail::evaluate_parts(e, &added);
  TemporalGraph g(part.names);
  for (const auto& [k, ts] : part.edges) g.add_times(k.first, k.second, ts);
  StaticGraph assoc = association_graph(g, delta);

  std::vector<int> keep(e.nodes().size(), 1);  // 1 keep as Join, 0 omit
  for (const auto& [x, pairs] : added) {
    MixedJoin mj;
    mj.node = x;
    for (const auto& [a, b] : pairs) {
      auto key = make_pair_sorted(g.index(a), g.index(b));
      (assoc.edges.count(key) ? mj.inside : mj.outside).push_back(key);
    }
    if (!mj.inside.empty() && !mj.outside.empty()) return mj;
    keep[x] = mj.inside.empty() ? 0 : 1;
  }

  CWExpression out(false);
  std::vector<int> map(e.nodes().size(), -1);
  // Operands precede operators, so one forward pass over reachable nodes works.
  std::vector<char> reach(e.nodes().size(), 0);
  reach[e.root()] = 1;
  for (int x = e.root(); x >= 0; --x) {
    if (!reach[x]) continue;
    const auto& n = e.node(x);
    if (n.left >= 0) reach[n.left] = 1;
    if (n.right >= 0) reach[n.right] = 1;
  }
  for (int x = 0; x <= e.root(); ++x) {
    if (!reach[x]) continue;
    const auto& n = e.node(x);
    switch (n.kind) {
      case CWKind::Intro: map[x] = out.intro(n.name, n.a); break;
      case CWKind::Union: map[x] = out.unite(map[n.left], map[n.right]); break;
      case CWKind::Relabel: map[x] = out.relabel(n.a, n.b, map[n.left]); break;
      case CWKind::JoinT:
      case CWKind::Join:
        map[x] = keep[x] ? out.join(n.a, n.b, map[n.left]) : map[n.left];
        break;
    }
  }
  out.set_root(map[e.root()]);
  return out;
}

}  // namespace tgp
