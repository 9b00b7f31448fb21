#include "tgp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace tgp::oracle {

namespace {

bool has_splitter(const TemporalGraph& g, uint32_t m, Time life) {
  for (Time t = 1; t <= life; ++t) {
    auto snap = snapshot(g, t);
    for (int x = 0; x < g.n(); ++x) {
      if (m >> x & 1) continue;
      int hit = 0, total = 0;
      for (int v = 0; v < g.n(); ++v)
        if (m >> v & 1) {
          ++total;
          if (snap.adjacent(x, v)) ++hit;
        }
      if (hit != 0 && hit != total) return true;
    }
  }
  return false;
}

std::vector<int> members(uint32_t m) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

}  // namespace

std::vector<uint32_t> all_modules(const TemporalGraph& g) {
  if (g.n() > 16) throw SizeBoundError("module oracle bound is 16 vertices");
  const Time life = g.lifetime();
  std::vector<uint32_t> out;
  for (uint32_t m = 1; m < (uint32_t{1} << g.n()); ++m)
    if (!has_splitter(g, m, life)) out.push_back(m);
  return out;
}

std::vector<std::vector<int>> maximal_strong_modules(const TemporalGraph& g) {
  const uint32_t full = (uint32_t{1} << g.n()) - 1;
  if (g.n() == 0) return {};
  if (g.n() == 1) return {{0}};
  auto mods = all_modules(g);
  auto overlap = [](uint32_t a, uint32_t b) { return (a & b) && (a & ~b) && (b & ~a); };
  std::vector<uint32_t> strong;
  for (uint32_t m : mods) {
    if (m == full) continue;
    bool ok = true;
    for (uint32_t o : mods)
      if (overlap(m, o)) {
        ok = false;
        break;
      }
    if (ok) strong.push_back(m);
  }
  std::vector<std::vector<int>> out;
  for (uint32_t m : strong) {
    bool maximal = true;
    for (uint32_t o : strong)
      if (o != m && (o & m) == m) maximal = false;
    if (maximal) out.push_back(members(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct WidthSearch {
  const TemporalGraph& g;
  std::map<uint32_t, int> memo;

  int width(uint32_t s) {
    if (std::popcount(s) == 1) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    auto vs = members(s);
    auto sub = g.induced(vs);
    // Modules of g[s], mapped back onto host indices.
    std::vector<uint32_t> mods;
    for (uint32_t m : all_modules(sub)) {
      if (m == (uint32_t{1} << vs.size()) - 1) continue;
      uint32_t host = 0;
      for (size_t i = 0; i < vs.size(); ++i)
        if (m >> i & 1) host |= uint32_t{1} << vs[i];
      mods.push_back(host);
    }
    int best = std::popcount(s);
    std::vector<uint32_t> parts;
    partitions(s, mods, parts, best);
    memo[s] = best;
    return best;
  }

  // Partitions of `rest` into modules; each part contains the lowest
  // remaining vertex, so every partition is produced once.
  void partitions(uint32_t rest, const std::vector<uint32_t>& mods, std::vector<uint32_t>& parts, int& best) {
    if (rest == 0) {
      if (parts.size() < 2) return;
      int w = static_cast<int>(parts.size());
      for (uint32_t p : parts) w = std::max(w, width(p));
      best = std::min(best, w);
      return;
    }
    if (static_cast<int>(parts.size()) >= best) return;
    uint32_t low = rest & (~rest + 1);
    for (uint32_t m : mods)
      if ((m & low) && (m & rest) == m) {
        parts.push_back(m);
        partitions(rest & ~m, mods, parts, best);
        parts.pop_back();
      }
  }
};

}  // namespace

int modular_width(const TemporalGraph& g) {
  if (g.n() > 8) throw SizeBoundError("modular-width oracle bound is 8 vertices");
  if (g.n() == 0) throw InputError("empty graph");
  WidthSearch w{g, {}};
  return w.width((uint32_t{1} << g.n()) - 1);
}

StaticGraph association_graph(const TemporalGraph& g, int delta) {
  StaticGraph out;
  out.names = g.names();
  const Time life = g.lifetime();
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) continue;
      bool all = life - delta + 1 >= 1;
      for (Time i = 1; all && i <= life - delta + 1; ++i) {
        bool hit = false;
        for (Time t = i; t <= i + delta - 1; ++t)
          if (g.active(u, v, t)) hit = true;
        if (!hit) all = false;
      }
      if (all) out.edges.insert({u, v});
    }
  return out;
}

int max_clique(const StaticGraph& g) {
  if (g.n() > 22) throw SizeBoundError("clique oracle bound is 22 vertices");
  int best = 0;
  for (uint32_t m = 1; m < (uint32_t{1} << g.n()); ++m) {
    int c = std::popcount(m);
    if (c <= best) continue;
    auto vs = members(m);
    bool clique = true;
    for (size_t i = 0; clique && i < vs.size(); ++i)
      for (size_t j = i + 1; clique && j < vs.size(); ++j)
        if (!g.adjacent(vs[i], vs[j])) clique = false;
    if (clique) best = c;
  }
  return best;
}

namespace {

bool walk_from(const TemporalStar& s, Time now, uint32_t seen, uint32_t goal) {
  if (seen == goal) return true;
  for (size_t l = 0; l < s.leaves.size(); ++l)
    for (Time in : s.times[l]) {
      if (in <= now) continue;
      for (Time out : s.times[l])
        if (out > in && walk_from(s, out, seen | (uint32_t{1} << l), goal)) return true;
    }
  return false;
}

}  // namespace

bool star_explorable(const TemporalStar& s) {
  if (s.leaves.size() > 8) throw SizeBoundError("walk oracle bound is 8 leaves");
  Time life = 0;
  for (const auto& ts : s.times)
    if (!ts.empty()) life = std::max(life, ts.back());
  if (life > 12) throw SizeBoundError("walk oracle bound is lifetime 12");
  return walk_from(s, 0, 0, (uint32_t{1} << s.leaves.size()) - 1);
}

}  // namespace tgp::oracle
