#include <algorithm>
#include <unordered_map>

#include "bits.hpp"
#include "tgp/cliquewidth.hpp"
#include "tgp/modular.hpp"

namespace tgp {

namespace {

struct DPValue {
  int size = 0;
  std::vector<std::string> witness;  // sorted
};

bool better(const DPValue& a, const DPValue& b) {
  if (a.size != b.size) return a.size > b.size;
  return a.witness < b.witness;
}

using StateMap = std::unordered_map<uint64_t, DPValue>;

void offer(StateMap& m, uint64_t key, DPValue v) {
  auto it = m.find(key);
  if (it == m.end())
    m.emplace(key, std::move(v));
  else if (better(v, it->second))
    it->second = std::move(v);
}

// State key: bits 0..7 occupied labels, bits 8.. adjacency flags for label pairs.
struct PairIndex {
  int w;
  int idx[8][8];
  explicit PairIndex(int w_) : w(w_) {
    int c = 0;
    for (int i = 0; i < w; ++i)
      for (int j = i + 1; j < w; ++j) idx[i][j] = idx[j][i] = c++;
  }
  uint64_t bit(int i, int j) const { return uint64_t{1} << (8 + idx[i][j]); }
};

}  // namespace

CliqueResult max_clique_cw(const CWExpression& e, int max_width) {
  if (e.temporal()) throw InputError("max_clique_cw expects a static expression");
  e.validate();
  auto labels = e.labels();
  const int w = static_cast<int>(labels.size());
  if (w > max_width || w > 8)
    throw SizeBoundError("expression width " + std::to_string(w) + " exceeds bound " +
                         std::to_string(std::min(max_width, 8)));
  auto lab = [&](Label l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  PairIndex pi(w);

  std::vector<char> reach(e.nodes().size(), 0);
  reach[e.root()] = 1;
  for (int x = e.root(); x >= 0; --x) {
    if (!reach[x]) continue;
    const auto& n = e.node(x);
    if (n.left >= 0) reach[n.left] = 1;
    if (n.right >= 0) reach[n.right] = 1;
  }

  std::unordered_map<int, StateMap> table;
  for (int x = 0; x <= e.root(); ++x) {
    if (!reach[x]) continue;
    const auto& n = e.node(x);
    StateMap cur;
    switch (n.kind) {
      case CWKind::Intro:
        cur.emplace(0, DPValue{});
        cur.emplace(uint64_t{1} << lab(n.a), DPValue{1, {n.name}});
        break;
      case CWKind::Union: {
        StateMap L = std::move(table.at(n.left)), R = std::move(table.at(n.right));
        table.erase(n.left);
        table.erase(n.right);
        for (const auto& [k1, v1] : L)
          for (const auto& [k2, v2] : R) {
            if ((k1 & k2 & 0xff) != 0) continue;  // same label on both sides never becomes adjacent
            DPValue v{v1.size + v2.size, v1.witness};
            v.witness.insert(v.witness.end(), v2.witness.begin(), v2.witness.end());
            std::sort(v.witness.begin(), v.witness.end());
            offer(cur, k1 | k2, std::move(v));
          }
        break;
      }
      case CWKind::Join: {
        StateMap in = std::move(table.at(n.left));
        table.erase(n.left);
        int i = lab(n.a), j = lab(n.b);
        for (auto& [k, v] : in) {
          uint64_t key = k;
          if ((k >> i & 1) && (k >> j & 1)) key |= pi.bit(i, j);
          offer(cur, key, std::move(v));
        }
        break;
      }
      case CWKind::Relabel: {
        StateMap in = std::move(table.at(n.left));
        table.erase(n.left);
        int i = lab(n.a), j = lab(n.b);
        for (auto& [k, v] : in) {
          bool hi = k >> i & 1, hj = k >> j & 1;
          if (!hi) {
            offer(cur, k, std::move(v));
            continue;
          }
          if (hj && !(k & pi.bit(i, j))) continue;
          uint64_t key = (k & 0xff & ~(uint64_t{1} << i)) | (uint64_t{1} << j);
          for (int a = 0; a < w; ++a)
            for (int b = a + 1; b < w; ++b)
              if (a != i && b != i && a != j && b != j && (k & pi.bit(a, b))) key |= pi.bit(a, b);
          for (int x2 = 0; x2 < w; ++x2) {
            if (x2 == i || x2 == j || !(k >> x2 & 1)) continue;
            bool ix = k & pi.bit(i, x2);
            bool jx = hj ? static_cast<bool>(k & pi.bit(j, x2)) : true;
            if (ix && jx) key |= pi.bit(j, x2);
          }
          offer(cur, key, std::move(v));
        }
        break;
      }
      case CWKind::JoinT:
        throw InputError("timed join in a static expression");
    }
    table[x] = std::move(cur);
  }

  DPValue best;
  for (const auto& [k, v] : table.at(e.root())) {
    bool complete = true;
    for (int i = 0; i < w && complete; ++i)
      for (int j = i + 1; j < w && complete; ++j)
        if ((k >> i & 1) && (k >> j & 1) && !(k & pi.bit(i, j))) complete = false;
    if (complete && better(v, best)) best = v;
  }
  return {best.size, best.witness};
}

namespace {

struct CliqueSearch {
  std::vector<detail::Bits> adj;
  std::vector<int> best, cur;

  void expand(detail::Bits cand) {
    // Greedy colouring bound over the candidate set.
    std::vector<int> order, colour;
    {
      detail::Bits uncol = cand;
      int c = 0;
      while (!uncol.none()) {
        ++c;
        detail::Bits q = uncol;
        while (!q.none()) {
          int v = q.first();
          q.reset(v);
          q.and_not(adj[v]);
          uncol.reset(v);
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (cur.size() + colour[idx] <= best.size()) return;
      int v = order[idx];
      cur.push_back(v);
      detail::Bits next = cand;
      next &= adj[v];
      if (next.none()) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(next);
      }
      cur.pop_back();
      cand.reset(v);
    }
  }
};

}  // namespace

std::vector<int> max_clique_exact(const StaticGraph& g) {
  CliqueSearch s;
  s.adj.assign(g.n(), detail::Bits(g.n()));
  for (const auto& [u, v] : g.edges) {
    s.adj[u].set(v);
    s.adj[v].set(u);
  }
  detail::Bits all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  if (g.n() > 0) s.expand(all);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

DeltaCliqueResult solve_temporal_delta_clique(const TemporalGraph& g, int delta, int h,
                                              const std::optional<CWExpression>& e) {
  StaticGraph assoc = association_graph(g, delta);
  DeltaCliqueResult r;
  if (e) {
    if (e->temporal()) throw InputError("supplied expression must be static");
    if (!verify_static_expression(*e, assoc))
      throw InputError("supplied expression does not evaluate to the association graph");
    auto c = max_clique_cw(*e);
    r.clique_size = c.size;
    r.witness = c.witness;
    r.method = "expression-dp";
  } else {
    std::optional<CWExpression> stat;
    auto compiled = tmw_to_tcw_expression(decomposition_tree(g));
    if (compiled.width() <= 8) {
      auto t = transfer_expression(compiled, delta);
      if (auto* ce = std::get_if<CWExpression>(&t)) stat = std::move(*ce);
    }
    if (stat) {
      auto c = max_clique_cw(*stat);
      r.clique_size = c.size;
      r.witness = c.witness;
      r.method = "transfer-dp";
    } else {
      auto c = max_clique_exact(assoc);
      r.clique_size = static_cast<int>(c.size());
      for (int v : c) r.witness.push_back(g.name(v));
      r.method = "branch-and-bound";
    }
  }
  r.yes = r.clique_size >= h;
  return r;
}

}  // namespace tgp
